"""Weyl group generation, reduced words, torus Borels and line chains."""

import random

import pytest

from nullcone.roots import build_root_system
from nullcone.weyl import (
    TorusBorel,
    WeylOrderError,
    borels_containing_torus,
    chain_of_lines,
    element_from_word,
    generate_weyl,
    inversions,
    weyl_orbit_pairs,
    weyl_order,
)


def test_small_group_orders():
    assert len(generate_weyl(build_root_system("A", 2))) == 6
    assert len(generate_weyl(build_root_system("B", 2))) == 8
    assert len(generate_weyl(build_root_system("F", 4))) == 1152


def test_generation_refusal_names_the_order():
    rs = build_root_system("E", 8)
    with pytest.raises(WeylOrderError, match="696729600"):
        generate_weyl(rs, 10**6)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)])
def test_length_equals_inversions_exhaustively(family, rank):
    rs = build_root_system(family, rank)
    for w in generate_weyl(rs):
        assert len(w.word) == inversions(rs, w)


def test_words_are_lexicographically_smallest():
    rs = build_root_system("A", 3)
    group = generate_weyl(rs)
    for w in group:
        # any other reduced word for the same action compares >= lexicographically
        for other in group:
            if other.perm == w.perm and other is not w:
                raise AssertionError("duplicate action in group")
    # spot check: the longest element of A2 gets (1,2,1), not (2,1,2)
    rs2 = build_root_system("A", 2)
    longest = max(generate_weyl(rs2), key=lambda w: len(w.word))
    assert longest.word == (1, 2, 1)


@pytest.mark.parametrize(
    "family,rank,expected", [("A", 1, 2), ("A", 2, 6), ("B", 3, 48), ("G", 2, 12)]
)
def test_torus_borel_counts(family, rank, expected):
    rs = build_root_system(family, rank)
    group = generate_weyl(rs)
    assert borels_containing_torus(rs, group) == expected


def test_torus_borel_support_membership():
    rs = build_root_system("A", 2)
    group = generate_weyl(rs)
    theta = (1, 1)
    holders = [w for w in group if TorusBorel(w).contains_support(rs, [theta])]
    assert sorted(w.word for w in holders) == [(), (1,), (2,)]


def test_chain_empty_support_any_word():
    rs = build_root_system("B", 2)
    w = element_from_word(rs, (1, 2, 1))
    chain = chain_of_lines(rs, [], w)
    assert len(chain) == 4
    assert chain[0].word == () and chain[-1].perm == w.perm


def test_chain_theta_one_step():
    rs = build_root_system("A", 2)
    w = element_from_word(rs, (1,))
    chain = chain_of_lines(rs, [(1, 1)], w)
    assert [c.word for c in chain] == [(), (1,)]
    # s_1(theta) = beta_2 stays positive
    assert w.apply_root(rs, (1, 1)) == (0, 1)


def test_chain_precondition_rejects_theta_for_length_two_words():
    # only e, s1, s2 keep theta inside w(b) in A2; longer words must be rejected
    rs = build_root_system("A", 2)
    w = element_from_word(rs, (1, 2))
    with pytest.raises(ValueError, match="precondition"):
        chain_of_lines(rs, [(1, 1)], w)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3)])
def test_chains_over_whole_group_with_seeded_supports(family, rank):
    rs = build_root_system(family, rank)
    group = generate_weyl(rs)
    rng = random.Random(f"chains:{family}{rank}")
    for w in group:
        pos_image = {w.apply_root(rs, r) for r in rs.positive_roots}
        common = [r for r in rs.positive_roots if r in pos_image]
        for _ in range(3):
            support = [r for r in common if rng.random() < 0.5]
            chain = chain_of_lines(rs, support, w)
            assert len(chain) == len(w.word) + 1
            assert chain[-1].perm == w.perm
            for a, b in zip(chain, chain[1:]):
                assert len(b.word) == len(a.word) + 1


def test_connectivity_transport_between_two_torus_borels():
    # if v(b) and w(b) both contain the support, a chain joins them after
    # translating by v: the element u = v^{-1} w satisfies the precondition
    from nullcone.weyl import _inverse_image

    rs = build_root_system("A", 3)
    group = generate_weyl(rs)
    by_perm = {g.perm: g for g in group}
    rng = random.Random("connect")
    checked = 0
    for _ in range(200):
        v = group[rng.randrange(len(group))]
        w = group[rng.randrange(len(group))]
        vpos = {v.apply_root(rs, r) for r in rs.positive_roots}
        wpos = {w.apply_root(rs, r) for r in rs.positive_roots}
        common = [r for r in rs.positive_roots if r in vpos and r in wpos]
        if not common:
            continue
        support = common[: rng.randint(1, len(common))]
        # u = v^{-1} w: the permutation with v.perm o u.perm == w.perm
        inv_v = [0] * len(v.perm)
        for j, img in enumerate(v.perm):
            inv_v[img] = j
        u = by_perm[tuple(inv_v[w.perm[j]] for j in range(len(w.perm)))]
        translated = [_inverse_image(rs, v, s) for s in support]
        chain = chain_of_lines(rs, translated, u)
        assert chain[-1].perm == u.perm
        checked += 1
    assert checked > 20


def test_orbit_pairs():
    rs1 = build_root_system("A", 1)
    g1 = generate_weyl(rs1)
    assert weyl_orbit_pairs(rs1, g1, ((0,), (0,))) == {((0,), (0,))}
    assert len(weyl_orbit_pairs(rs1, g1, ((1,), (2,)))) == 2
    rs2 = build_root_system("A", 2)
    g2 = generate_weyl(rs2)
    orbit = weyl_orbit_pairs(rs2, g2, ((1, 2), (3, 5)))
    assert len(orbit) == 6
    assert len(generate_weyl(rs2)) % len(orbit) == 0


def test_weyl_order_formulas():
    assert weyl_order(build_root_system("D", 4)) == 192
    assert weyl_order(build_root_system("E", 7)) == 2903040
