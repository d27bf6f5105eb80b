"""Exact linear algebra, checked against brute-force oracles."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nullcone import linalg as la


def det_by_permutations(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= m[i][perm[i]]
        total += prod
    return total


small_matrix = st.integers(2, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_det_matches_permutation_expansion(m):
    assert la.det(m) == det_by_permutations(m)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_char_poly_matches_det_of_pencil(m):
    n = len(m)
    coeffs = la.char_poly(m)
    for t in range(-2, n + 2):
        shifted = [[(t if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        value = t**n + sum(c * t ** (n - k) for k, c in enumerate(coeffs, start=1))
        assert value == det_by_permutations(shifted)


@settings(max_examples=40, deadline=None)
@given(small_matrix)
def test_faddeev_aux_carries_coefficient_differentials(m):
    n = len(m)
    coeffs, aux = la.faddeev(m)
    # directional derivative of c_k along v, via first-order interpolation
    for a in range(n):
        for b in range(n):
            v = la.mat([[1 if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)])
            plus = la.char_poly(la.add(la.mat(m), v))
            minus = la.char_poly(la.sub(la.mat(m), v))
            for k in range(1, n + 1):
                # c_k is degree k, so use an exact odd-sample derivative at 0
                got = -la.trace(la.mul(aux[k - 1], v))
                twice = la.char_poly(la.add(la.mat(m), la.scale(2, v)))
                half2 = la.char_poly(la.sub(la.mat(m), la.scale(2, v)))
                vals = [half2[k - 1], minus[k - 1], coeffs[k - 1], plus[k - 1], twice[k - 1]]
                deriv = (
                    Fraction(vals[0], 12)
                    - Fraction(2 * vals[1], 3)
                    + Fraction(2 * vals[3], 3)
                    - Fraction(vals[4], 12)
                )
                if k <= 4:  # five samples determine polynomials of degree <= 4
                    assert got == deriv
            break
        break


def test_rank_and_nullspace_consistency():
    m = [
        [1, 2, 3, 4],
        [2, 4, 6, 8],
        [0, 1, 1, 0],
    ]
    r = la.rank(m)
    ns = la.nullspace(m)
    assert r == 2
    assert len(ns) == 4 - r
    for v in ns:
        assert all(sum(row[j] * v[j] for j in range(4)) == 0 for row in m)


def test_rank_large_matrix_avoids_entry_blowup():
    # 40 pivots would make Bareiss minors astronomically large
    n = 40
    m = [[(i * j + i + 2 * j) % 7 - 3 for j in range(n + 5)] for i in range(n)]
    assert 0 < la.rank(m) <= n


def test_solve_and_inverse():
    a = [[2, 1], [1, 1]]
    assert la.solve(a, [3, 2]) == (Fraction(1), Fraction(1))
    inv = la.inverse(a)
    assert la.mul(a, inv) == la.identity(2)
    with pytest.raises(ValueError):
        la.inverse([[1, 1], [1, 1]])
    assert la.solve([[1, 1], [1, 1]], [0, 1]) is None


def test_nilpotent_exp_and_span_helpers():
    assert la.in_span([(1, 0, 1), (0, 1, 0)], (2, 3, 2))
    assert not la.in_span([(1, 0, 1)], (1, 0, 0))
