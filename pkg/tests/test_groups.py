import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusiontransfer.catalog import CATALOG, catalog_group, cyclic, dihedral
from fusiontransfer.groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    all_subgroups,
    commutator_subgroup,
    conjugate_subgroup,
    coset_data,
    derived_subgroup,
    double_coset_reps,
    find_isomorphism,
    frattini_subgroup,
    generate_subgroup,
    has_wreath_quotient,
    injective_homs,
    is_isomorphism,
    normal_subgroups,
    normalizer,
    overgroups,
    p_part,
    p_residual,
    quotient_group,
    structure_profile,
    sylow_subgroup,
    wreath_group,
)

from oracles import closure

SMALL = [n for n in CATALOG if catalog_group(n).order <= 48]


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        FiniteGroup([[1, 0], [0, 1]])  # identity not at index 0
    # a Latin square that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        FiniteGroup(loop)


@pytest.mark.parametrize("name", SMALL)
def test_catalog_tables_are_groups(name):
    G = catalog_group(name)
    FiniteGroup(G.mul)  # full validation


@given(st.sampled_from(SMALL), st.lists(st.integers(0, 10_000), min_size=1, max_size=3))
def test_generated_subgroup_matches_closure(name, raw):
    G = catalog_group(name)
    gens = [r % G.order for r in raw]
    H = generate_subgroup(G, gens)
    assert H.members == closure(G, gens)
    H.check()


@pytest.mark.parametrize(
    "name,p,order",
    [("symmetric:4", 2, 8), ("symmetric:4", 3, 3), ("alternating:6", 2, 8), ("alternating:6", 3, 9),
     ("GL23", 2, 16), ("symmetric:5", 5, 5), ("wreath:3", 3, 81), ("cyclic:12", 2, 4)],
)
def test_sylow_orders(name, p, order):
    G = catalog_group(name)
    S = sylow_subgroup(G, p)
    S.check()
    assert S.order == order == p_part(G.order, p)


def test_conjugation_convention():
    G = catalog_group("symmetric:3")
    g, x = G.index("(1 2)"), G.index("(1 2 3)")
    assert G.conj(g, x) == G.mul[G.mul[g][x]][G.inv[g]]
    H = generate_subgroup(G, [G.index("(2 3)")])
    assert conjugate_subgroup(H, g).members == {0, G.index("(1 3)")}


def test_derived_and_frattini():
    D8 = dihedral(8)
    assert derived_subgroup(D8.whole).members == {0, D8.index("a^2")}
    assert frattini_subgroup(D8.whole).members == {0, D8.index("a^2")}
    S4 = catalog_group("symmetric:4")
    assert derived_subgroup(S4.whole).order == 12
    assert commutator_subgroup(S4.whole, S4.whole).order == 12


@given(st.sampled_from(SMALL), st.integers(0, 10_000))
def test_cosets_partition(name, seed):
    G = catalog_group(name)
    subs = all_subgroups(sylow_subgroup(G, 2)) if G.order % 2 == 0 else all_subgroups(G.whole)
    rng = random.Random(seed)
    P = rng.choice(subs)
    S = G.whole
    cd = coset_data(S, P, rng)
    assert len(cd.transversal) == G.order // P.order
    for x in S.elements:
        for t in cd.transversal:
            assert cd.residue(x, t) in P.members
    reps = double_coset_reps(P, G, P, rng)
    blocks = [frozenset(G.mul[G.mul[a][g]][b] for a in P.elements for b in P.elements) for g in reps]
    assert sum(len(b) for b in blocks) == G.order
    assert len(set().union(*blocks)) == G.order


def test_quotient_group():
    S4 = catalog_group("symmetric:4")
    V4 = [N for N in normal_subgroups(S4.whole) if N.order == 4][0]
    Q = quotient_group(S4, V4)
    assert Q.group.order == 6 and not Q.group.is_abelian
    assert Q.preimage(Q.group.whole) == S4.whole
    with pytest.raises(GroupError):
        quotient_group(S4, generate_subgroup(S4, [S4.index("(1 2)")]))


def test_subgroup_counts():
    # classical counts
    assert len(all_subgroups(catalog_group("symmetric:4").whole)) == 30
    assert len(all_subgroups(dihedral(8).whole)) == 10
    assert len(all_subgroups(catalog_group("quaternion:8").whole)) == 6
    assert len(all_subgroups(catalog_group("product:cyclic:3xcyclic:3").whole)) == 6


def test_overgroups_and_normalizer():
    S4 = catalog_group("symmetric:4")
    S = sylow_subgroup(S4, 2)
    assert [H.order for H in overgroups(S4, S)] == [8, 24]
    assert normalizer(S4, S) == S


def test_wreath_quotients():
    D8 = dihedral(8)
    w = has_wreath_quotient(D8.whole, 2)
    assert w is not None and w.kernel.order == 1
    assert is_isomorphism(wreath_group(2), w.quotient.group, w.isomorphism)
    assert has_wreath_quotient(catalog_group("quaternion:8").whole, 2) is None
    assert has_wreath_quotient(cyclic(8).whole, 2) is None
    W3 = catalog_group("wreath:3")
    assert has_wreath_quotient(W3.whole, 3).kernel.order == 1
    assert has_wreath_quotient(catalog_group("extraspecial:27+").whole, 3) is None


def test_isomorphism_search():
    assert find_isomorphism(catalog_group("wreath:2"), dihedral(8)) is not None
    assert find_isomorphism(dihedral(8), catalog_group("quaternion:8")) is None
    assert find_isomorphism(catalog_group("symmetric:3"), dihedral(6)) is not None


@pytest.mark.parametrize(
    "name,p,cls,exp,regular,metacyclic",
    [
        ("dihedral:8", 2, 2, 4, False, True),
        ("quaternion:8", 2, 2, 4, False, True),
        ("extraspecial:27+", 3, 2, 3, True, False),
        ("extraspecial:27-", 3, 2, 9, True, True),
        ("wreath:3", 3, 3, 9, False, False),
        ("cyclic:9", 3, 1, 9, True, True),
    ],
)
def test_structure_profiles(name, p, cls, exp, regular, metacyclic):
    prof = structure_profile(catalog_group(name).whole, p)
    assert (prof.nilpotency_class, prof.exponent, prof.is_regular, prof.is_metacyclic) == (
        cls, exp, regular, metacyclic,
    )


def test_p_residual():
    assert p_residual(catalog_group("symmetric:4"), 2).order == 12
    assert p_residual(catalog_group("alternating:4"), 2).order == 12
    assert p_residual(catalog_group("alternating:4"), 3).order == 4
    assert p_residual(catalog_group("symmetric:3"), 2).order == 3


def test_injective_homs_counts():
    D8 = dihedral(8)
    # |Aut(D8)| = 8, |Aut(C4)| = 2, |Aut(C3 x C3)| = 48
    assert len(injective_homs(D8.whole, D8.whole)) == 8
    C4 = cyclic(4)
    assert len(injective_homs(C4.whole, C4.whole)) == 2
    E9 = catalog_group("product:cyclic:3xcyclic:3")
    assert len(injective_homs(E9.whole, E9.whole)) == 48
    assert len(injective_homs(Subgroup(C4, [0, 2]), D8.whole)) == 5
