"""Exact linear algebra over the rationals.

Everything in this package that looks like numerics is done here, with
``int``/``fractions.Fraction`` entries and no floating point anywhere.
Matrices are sequences of equal-length rows; functions return tuples of
tuples so results are hashable and safe to share between threads.

Rank and determinant use fraction-free (Bareiss) elimination on integer
input and plain Gaussian elimination on rational input; both are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vec = tuple
Mat = tuple


def mat(rows) -> Mat:
    return tuple(tuple(x for x in row) for row in rows)


def zeros(nrows: int, ncols: int) -> Mat:
    return tuple((0,) * ncols for _ in range(nrows))


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a: Mat) -> Mat:
    return tuple(tuple(c * x for x in row) for row in a)


def mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Sequence) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def trace(a: Mat):
    return sum(a[i][i] for i in range(len(a)))


def commutator(a: Mat, b: Mat) -> Mat:
    return sub(mul(a, b), mul(b, a))


def is_zero(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def flatten(a: Mat) -> Vec:
    return tuple(x for row in a for x in row)


def mat_pow(a: Mat, k: int) -> Mat:
    out = identity(len(a))
    for _ in range(k):
        out = mul(out, a)
    return out


def _all_int(rows) -> bool:
    return all(isinstance(x, int) for row in rows for x in row)


def rank(rows) -> int:
    """Rank of a matrix, exact.

    Small integer matrices go through fraction-free Bareiss elimination
    (all divisions exact); everything else through Fraction Gaussian
    elimination, whose gcd-reduced entries stay small where Bareiss minors
    would grow with the number of pivots.
    """
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    if min(nrows, ncols) <= 24 and _all_int(rows):
        r = 0
        prev = 1
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            pivot = m[r][c]
            for i in range(r + 1, nrows):
                mic = m[i][c]
                if mic == 0 and pivot == prev:
                    continue
                row_i, row_r = m[i], m[r]
                for j in range(c + 1, ncols):
                    row_i[j] = (row_i[j] * pivot - mic * row_r[j]) // prev
                row_i[c] = 0
            prev = pivot
            r += 1
            if r == nrows:
                break
        return r
    m = [[Fraction(x) for x in row] for row in m]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(rows) -> list:
    """Basis of the right kernel, as a list of Fraction tuples."""
    m, pivots = rref(rows)
    if not rows:
        return []
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """Solve a x = b exactly; returns a Fraction tuple or None if inconsistent.

    When the system is underdetermined the free variables are set to 0.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    m, pivots = rref(aug)
    for r in range(len(pivots), nrows):
        if m[r][ncols] != 0:
            return None
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return tuple(x)


def inverse(rows) -> Mat:
    """Exact inverse of a square matrix; raises if singular."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in m[:n])


def det(rows):
    """Determinant, exact (Bareiss on integer input)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    if _all_int(rows):
        prev = 1
        for c in range(n - 1):
            piv = next((i for i in range(c, n) if m[i][c] != 0), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            pivot = m[c][c]
            for i in range(c + 1, n):
                mic = m[i][c]
                row_i, row_c = m[i], m[c]
                for j in range(c + 1, n):
                    row_i[j] = (row_i[j] * pivot - mic * row_c[j]) // prev
                row_i[c] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]
    m = [[Fraction(x) for x in row] for row in m]
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pivot = m[c][c]
        out *= pivot
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / pivot
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * out


def faddeev(rows):
    """Faddeev-LeVerrier data of a square matrix m.

    Returns (coeffs, aux) where det(tI - m) = t^N + sum coeffs[k-1] t^(N-k)
    and aux[k] is the k-th auxiliary matrix M_k (M_0 = I).  These matrices
    carry the differentials of the coefficients: d c_k(m)(v) equals
    -trace(M_{k-1} v).  All divisions are exact.
    """
    n = len(rows)
    m = mat(rows)
    coeffs = []
    aux = [identity(n)]
    work = m
    ints = _all_int(rows)
    for k in range(1, n + 1):
        t = trace(work)
        if ints:
            q, rem = divmod(-t, k)
            assert rem == 0
            ck = q
        else:
            ck = Fraction(-t, 1) / k
        coeffs.append(ck)
        if k < n:
            nxt = add(work, scale(ck, identity(n)))
            aux.append(nxt)
            work = mul(m, nxt)
    return tuple(coeffs), aux


@lru_cache(maxsize=None)
def _char_interp_inverse(npoints: int):
    v = [[Fraction(t) ** k for k in range(npoints)] for t in range(npoints)]
    return inverse(v)


def _det_int(m, n):
    """Bareiss determinant of an integer list-of-lists (destructive)."""
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pivot = m[c][c]
        row_c = m[c]
        for i in range(c + 1, n):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, n):
                row_i[j] = (row_i[j] * pivot - mic * row_c[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def char_poly(rows) -> tuple:
    """Coefficients (c_1, ..., c_N) of det(tI - m) = t^N + c_1 t^(N-1) + ... + c_N.

    Integer matrices go through determinant evaluation at t = 0..N plus
    exact interpolation; anything else through Faddeev-LeVerrier.
    """
    n = len(rows)
    if n == 0:
        return ()
    if _all_int(rows):
        values = []
        for t in range(n + 1):
            work = [
                [(t if a == b else 0) - rows[a][b] for b in range(n)]
                for a in range(n)
            ]
            values.append(_det_int(work, n))
        inv = _char_interp_inverse(n + 1)
        poly = mat_vec(inv, values)  # coefficients of t^0..t^n
        out = []
        for k in range(1, n + 1):
            c = poly[n - k]
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)
    return faddeev(rows)[0]


def row_space_rank(vectors) -> int:
    """Rank of the span of a list of equal-length vectors."""
    return rank(list(vectors))


def in_span(vectors, v) -> bool:
    """Whether v lies in the span of the given vectors."""
    base = list(vectors)
    return rank(base) == rank(base + [list(v)])
