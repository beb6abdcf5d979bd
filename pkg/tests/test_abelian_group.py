import itertools
from math import gcd

import pytest

from abelian_codes import (
    BadDivisor,
    GroupTooLarge,
    HIsWholeGroup,
    NoRootsOfUnity,
    NotASubgroup,
    NotCocyclic,
    Subgroup,
    abelian_groups_of_order,
    all_subgroups,
    annihilator,
    automorphisms,
    brute_force_automorphisms,
    characters,
    cocyclic_subgroups,
    cyclic_subgroups,
    euler_phi,
    field_make,
    group_make,
    power_automorphisms,
    quotient_type,
    sharp,
    subgroup_orbits,
    subgroup_product,
    sylow_decompose,
)


def gen(G, *gens):
    return Subgroup.generated(G, list(gens))


# ---------------------------------------------------------------------------
# construction and normalization
# ---------------------------------------------------------------------------

def test_group_make_normalizes_to_invariant_factors():
    G = group_make([9, 3])
    assert G.divisors == (3, 9)
    assert (G.order, G.exponent) == (27, 9)
    assert group_make([3, 9]).divisors == (3, 9)


def test_group_make_crt_merge():
    assert group_make([2, 3]).divisors == (6,)
    assert group_make([4, 3, 2, 9]).divisors == (6, 36)


def test_group_make_trivial_and_errors():
    G = group_make([])
    assert (G.order, G.exponent, G.divisors) == (1, 1, ())
    with pytest.raises(BadDivisor):
        group_make([1, 3])
    with pytest.raises(BadDivisor):
        group_make([0])


def test_element_arithmetic_and_order():
    G = group_make([9, 3])
    a = G.element((0, 1))
    b = G.element((1, 0))
    assert (a + b).exps == (1, 1)
    assert (-a).exps == (0, 8)
    assert (3 * a).exps == (0, 3)
    assert a.order() == 9 and b.order() == 3 and (a + b).order() == 9
    assert G.identity.order() == 1


# ---------------------------------------------------------------------------
# Sylow decomposition
# ---------------------------------------------------------------------------

def test_sylow_components():
    assert {p: c.divisors for p, c in sylow_decompose(group_make([6])).components.items()} \
        == {2: (2,), 3: (3,)}
    assert {p: c.divisors for p, c in sylow_decompose(group_make([9, 3])).components.items()} \
        == {3: (3, 9)}
    dec = sylow_decompose(group_make([45, 3]))
    assert {p: c.divisors for p, c in dec.components.items()} == {3: (3, 9), 5: (5,)}


def test_sylow_split_merge_elements_lossless():
    G = group_make([45, 3])
    dec = sylow_decompose(G)
    for exps in G.elements:
        g = G.element(exps)
        assert dec.merge_element(dec.split_element(g)) == g


def test_sylow_split_merge_subgroups_lossless():
    G = group_make([45, 3])
    dec = sylow_decompose(G)
    for H in all_subgroups(G):
        assert dec.merge_subgroup(dec.split_subgroup(H)) == H


# ---------------------------------------------------------------------------
# subgroup lattice
# ---------------------------------------------------------------------------

def test_all_subgroups_counts():
    assert len(all_subgroups(group_make([3, 3]))) == 6
    assert len(all_subgroups(group_make([9]))) == 3
    subs = all_subgroups(group_make([9, 3]))
    assert len([H for H in subs if H.order == 9]) == 4
    assert len([H for H in subs if H.order == 3]) == 4
    # product lattice: 10 subgroups per 3-part, 2 per 5-part
    assert len(all_subgroups(group_make([45, 3]))) == 20


def test_all_subgroups_bound():
    with pytest.raises(GroupTooLarge):
        all_subgroups(group_make([3, 3]), max_order=4)


def test_subgroup_validation():
    G = group_make([9, 3])
    with pytest.raises(NotASubgroup):
        Subgroup(G, [(0, 0), (0, 1)])  # not closed
    H = Subgroup(G, [(0, 0), (0, 3), (0, 6)])
    assert H.order == 3


def test_quotient_type_examples():
    G = group_make([9, 3])
    assert quotient_type(G, Subgroup.whole(G)) == ()
    assert quotient_type(G, gen(G, (1, 3))) == (9,)   # <a^3 b>
    assert quotient_type(G, gen(G, (0, 3))) == (3, 3)  # <a^3>
    assert quotient_type(G, Subgroup.trivial(G)) == (3, 9)


def test_subgroup_invariant_factors():
    G = group_make([9, 3])
    assert gen(G, (0, 3), (1, 0)).invariant_factors() == (3, 3)
    assert gen(G, (1, 1)).invariant_factors() == (9,)


def test_cocyclic_subgroups_examples():
    C9 = group_make([9])
    assert [H.order for H in cocyclic_subgroups(C9)] == [1, 3]

    G = group_make([9, 3])
    cc = cocyclic_subgroups(G)
    assert len(cc) == 7
    expected = {
        gen(G, (0, 1)), gen(G, (1, 1)), gen(G, (2, 1)),       # <ab^i>, order 9
        gen(G, (0, 3), (1, 0)),                                # <a^3> x <b>
        gen(G, (1, 0)), gen(G, (1, 3)), gen(G, (1, 6)),        # order 3
    }
    assert set(cc) == expected
    assert gen(G, (0, 3)) not in set(cc)  # <a^3>: non-cyclic quotient

    C33 = group_make([3, 3])
    assert [H.order for H in cocyclic_subgroups(C33)] == [3, 3, 3, 3]

    assert cocyclic_subgroups(group_make([])) == []


@pytest.mark.parametrize("divisors", [[9, 3], [3, 15], [12], [4, 2], [45, 3]])
def test_cocyclic_duality_route_matches_definition(divisors):
    G = group_make(divisors)
    via_duality = set(cocyclic_subgroups(G))
    via_definition = {
        H for H in all_subgroups(G)
        if H.order < G.order and len(quotient_type(G, H)) <= 1
    }
    assert via_duality == via_definition


def test_sharp_examples():
    C9 = group_make([9])
    assert sharp(C9, Subgroup.trivial(C9)) == gen(C9, (3,))

    G = group_make([9, 3])
    b = gen(G, (1, 0))
    assert sharp(G, b) == subgroup_product(gen(G, (0, 3)), b)

    C33 = group_make([3, 3])
    with pytest.raises(NotCocyclic):
        sharp(C33, Subgroup.trivial(C33))
    with pytest.raises(HIsWholeGroup):
        sharp(C33, Subgroup.whole(C33))
    with pytest.raises(NotCocyclic):
        sharp(group_make([6]), Subgroup.trivial(group_make([6])))  # not a p-group


# ---------------------------------------------------------------------------
# characters and duality
# ---------------------------------------------------------------------------

def test_characters_trivial_group():
    G = group_make([])
    chs = characters(G, field_make(2))
    assert len(chs) == 1 and chs[0].value(G.identity).coeffs == (1,)


def test_characters_c3_over_gf4():
    G = group_make([3])
    F4 = field_make(2, 2)
    chs = characters(G, F4)
    assert len(chs) == 3
    nontrivial = [ch for ch in chs if ch.exps != (0,)]
    values = {ch.raw_value((1,)) for ch in nontrivial} | {F4.one}
    assert values == {raw for raw in F4.elements() if raw != F4.zero}


def test_characters_c9xc3_over_gf64():
    G = group_make([9, 3])
    F64 = field_make(2, 6)
    chs = characters(G, F64)
    assert len(chs) == 27
    # multiplicative on all pairs, and the full set separates elements
    for ch in chs[:5]:
        for x in G.elements:
            for y in G.elements:
                gx, gy = G.element(x), G.element(y)
                assert ch.value(gx + gy) == ch.value(gx) * ch.value(gy)
    tables = {tuple(ch.raw_value(x) for x in G.elements) for ch in chs}
    assert len(tables) == 27


def test_characters_need_roots():
    with pytest.raises(NoRootsOfUnity):
        characters(group_make([9, 3]), field_make(2))


def test_annihilator_extremes():
    G = group_make([9, 3])
    assert annihilator(G, Subgroup.whole(G)) == Subgroup.trivial(G)
    assert annihilator(G, Subgroup.trivial(G)) == Subgroup.whole(G)


@pytest.mark.parametrize("divisors", [[9, 3], [8], [4, 2], [3, 3], [12, 2]])
def test_annihilator_duality_small(divisors):
    G = group_make(divisors)
    subs = all_subgroups(G)
    for H in subs:
        A = annihilator(G, H)
        assert annihilator(G, A) == H
        assert A.order * H.order == G.order
    for H, K in itertools.combinations(subs, 2):
        if H.contains_subgroup(K):
            assert annihilator(G, K).contains_subgroup(annihilator(G, H))


def test_annihilator_of_cyclic_is_cocyclic_with_matching_quotient():
    G = group_make([9, 3])
    for C in cyclic_subgroups(G, nontrivial_only=True):
        A = annihilator(G, C)
        qt = quotient_type(G, A)
        assert len(qt) == 1 and qt[0] == C.order


def test_cocyclic_equals_annihilators_of_cyclic():
    G = group_make([4, 8])
    anns = {annihilator(G, C) for C in cyclic_subgroups(G, nontrivial_only=True)}
    assert anns == set(cocyclic_subgroups(G))


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def test_automorphism_counts_cyclic_and_klein():
    assert len(automorphisms(group_make([9]))) == 6
    assert len(automorphisms(group_make([2, 2]))) == 6


@pytest.mark.parametrize("divisors", [
    [9], [2, 2], [3, 3], [9, 3], [4, 2], [8, 2], [12], [2, 2, 2],
    [4, 4], [3, 15], [2, 6],
])
def test_generator_closure_matches_brute_force(divisors):
    G = group_make(divisors)
    closure = {psi.perm for psi in automorphisms(G)}
    brute = {psi.perm for psi in brute_force_automorphisms(G)}
    assert closure == brute


def test_automorphisms_bound():
    with pytest.raises(GroupTooLarge):
        automorphisms(group_make([1024]), max_order=512)


def test_power_automorphisms():
    C9 = group_make([9])
    auts = automorphisms(C9)
    assert len(power_automorphisms(auts)) == 6  # cyclic: Aut = power maps

    G = group_make([9, 3])
    laut = power_automorphisms(automorphisms(G))
    assert len(laut) == euler_phi(G.exponent) == 6

    K = group_make([2, 2])
    assert len(power_automorphisms(automorphisms(K))) == 1


def test_power_automorphisms_fix_every_subgroup_and_others_do_not():
    G = group_make([9, 3])
    subs = all_subgroups(G)
    auts = automorphisms(G)
    laut = set(power_automorphisms(auts))
    for psi in auts:
        fixes_all = all(psi.apply_subgroup(H) == H for H in subs)
        assert fixes_all == (psi in laut)


def test_power_map_existence_for_every_element_and_exponent():
    G = group_make([9, 3])
    laut = power_automorphisms(automorphisms(G))
    for exps in G.elements:
        g = G.element(exps)
        o = g.order()
        for r in range(1, o + 1):
            if gcd(r, o) == 1:
                assert any(psi.apply_element(g) == r * g for psi in laut)


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

def test_subgroup_orbits_c9xc3_partition():
    G = group_make([9, 3])
    family = cocyclic_subgroups(G) + [Subgroup.whole(G)]
    orbits = subgroup_orbits(G, family)
    as_sets = {frozenset(H.elements for H in orbit) for orbit in orbits}
    expected = {
        frozenset({Subgroup.whole(G).elements}),
        frozenset({gen(G, (0, 1)).elements, gen(G, (1, 1)).elements,
                   gen(G, (2, 1)).elements}),
        frozenset({gen(G, (0, 3), (1, 0)).elements}),
        frozenset({gen(G, (1, 0)).elements, gen(G, (1, 3)).elements,
                   gen(G, (1, 6)).elements}),
    }
    assert as_sets == expected


def test_subgroup_orbits_isomorphic_but_not_conjugate():
    G = group_make([9, 3])
    orbits = subgroup_orbits(G, [gen(G, (0, 3)), gen(G, (1, 0))])
    assert len(orbits) == 2


def test_subgroup_orbits_whole_group_fixed():
    G = group_make([4, 2])
    orbits = subgroup_orbits(G, [Subgroup.whole(G)])
    assert len(orbits) == 1 and orbits[0] == [Subgroup.whole(G)]


def test_subgroup_orbits_is_partition():
    G = group_make([4, 4])
    subs = all_subgroups(G)
    orbits = subgroup_orbits(G, subs)
    flat = [H for orbit in orbits for H in orbit]
    assert sorted(flat) == sorted(subs)
    assert len({H.elements for H in flat}) == len(flat)
    full = {psi.perm: psi for psi in automorphisms(G)}
    for orbit in orbits:
        members = {H.elements for H in orbit}
        for H in orbit:
            for psi in full.values():
                assert psi.apply_subgroup(H).elements in members


def test_orbits_with_generators_match_full_group_orbits():
    for divisors in ([9, 3], [8, 2], [3, 3], [12, 2]):
        G = group_make(divisors)
        subs = all_subgroups(G)
        orbits_fast = subgroup_orbits(G, subs)
        auts = automorphisms(G)
        seen = set()
        orbits_slow = []
        for H in sorted(subs, key=lambda s: s.elements):
            if H.elements in seen:
                continue
            orbit = {psi.apply_subgroup(H).elements for psi in auts}
            seen |= orbit
            orbits_slow.append(orbit)
        assert {frozenset(o) for o in orbits_slow} \
            == {frozenset(H.elements for H in o) for o in orbits_fast}


# ---------------------------------------------------------------------------
# homocyclic structure
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("divisors,p,r,m", [
    ([3, 3], 3, 1, 2), ([4, 4], 2, 2, 2), ([2, 2, 2], 2, 1, 3), ([9, 9], 3, 2, 2),
])
def test_homocyclic_cocyclic_contains_corank_one(divisors, p, r, m):
    G = group_make(divisors)
    subs = all_subgroups(G)
    target = tuple([p ** r] * (m - 1))
    for H in cocyclic_subgroups(G):
        assert any(
            H.contains_subgroup(K) and K.invariant_factors() == target
            for K in subs
        )


@pytest.mark.parametrize("divisors,p,r", [([9, 9], 3, 2), ([4, 4], 2, 2)])
def test_homocyclic_cyclic_extends_to_max_order(divisors, p, r):
    G = group_make(divisors)
    cyclics = cyclic_subgroups(G)
    full = [C for C in cyclics if C.order == p ** r]
    for C in cyclics:
        assert any(D.contains_subgroup(C) for D in full)


def test_abelian_groups_of_order():
    assert [g.divisors for g in abelian_groups_of_order(1)] == [()]
    assert [g.divisors for g in abelian_groups_of_order(27)] \
        == [(3, 3, 3), (3, 9), (27,)]
    assert len(abelian_groups_of_order(16)) == 5
    assert [g.divisors for g in abelian_groups_of_order(45)] == [(3, 15), (45,)]
