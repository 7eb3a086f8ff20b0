import pytest

from fusiontransfer.catalog import catalog, catalog_group
from fusiontransfer.fusion import (
    FusionError,
    aut_F,
    controls_transfer,
    elementary_focal_subgroup,
    focal_subgroup,
    fusion_system,
    hyperfocal_subgroup,
    intermediate_subsystem,
    is_invariant,
    is_strongly_closed,
    is_subsystem,
    is_trivial,
    normalizer_subsystem,
    p_power_index_subsystem,
    quotient_system,
    trivial_subsystem,
)
from fusiontransfer.groups import derived_subgroup, frattini_subgroup, join, normal_subgroups, prime_divisors

from oracles import focal_by_theorem, p_prime_residual

INSTANCES = [(n, p) for n, G in catalog() for p in prime_divisors(G.order)]


@pytest.mark.parametrize("name,p", INSTANCES)
def test_residuals_against_group_oracles(name, p):
    F = fusion_system(catalog_group(name), p)
    assert focal_subgroup(F).members == focal_by_theorem(F.S, F.G)
    assert hyperfocal_subgroup(F).members == p_prime_residual(F.G, p) & F.S.members
    assert elementary_focal_subgroup(F) == join(frattini_subgroup(F.S), focal_subgroup(F))


def test_s4_values(s4_2):
    F = s4_2
    assert focal_subgroup(F).order == 4
    assert hyperfocal_subgroup(F) == focal_subgroup(F)
    assert elementary_focal_subgroup(F).order == 4
    assert focal_subgroup(normalizer_subsystem(F)) == derived_subgroup(F.S)
    assert not controls_transfer(F, normalizer_subsystem(F))
    assert controls_transfer(F, F)


def test_aut_f_of_klein_four(s4_2):
    V4 = focal_subgroup(s4_2)
    A = aut_F(s4_2, V4)
    assert A.order == 6 and len(A.residual) == 3
    D8 = s4_2.S
    assert aut_F(s4_2, D8).order == 4  # Inn(D8) = D8/Z(D8)


def test_trivial_systems(s3_2):
    assert is_trivial(s3_2)
    assert focal_subgroup(s3_2).order == 1
    assert is_trivial(trivial_subsystem(s3_2))


def test_strong_closure(s4_2):
    F = s4_2
    V4 = focal_subgroup(F)
    assert is_strongly_closed(F, V4)
    Z = [N for N in normal_subgroups(F.S) if N.order == 2][0]
    assert not is_strongly_closed(F, Z)
    assert is_strongly_closed(F, F.S)


def test_invariance(s4_2):
    F = s4_2
    V4 = focal_subgroup(F)
    sub = p_power_index_subsystem(F, V4)
    assert sub.G.order == 12  # the alternating group
    assert is_invariant(F, sub)
    assert not is_invariant(F, trivial_subsystem(F))
    assert is_invariant(F, F)


def test_p_power_index_requires_hyperfocal(s4_2):
    Z = [N for N in normal_subgroups(s4_2.S) if N.order == 2][0]
    with pytest.raises(FusionError):
        p_power_index_subsystem(s4_2, Z)


@pytest.mark.parametrize("name,p", INSTANCES)
def test_quotient_by_hyperfocal_is_trivial(name, p):
    F = fusion_system(catalog_group(name), p)
    Q = quotient_system(F, hyperfocal_subgroup(F))
    assert is_trivial(Q)


def test_quotient_needs_strong_closure(s4_2):
    Z = [N for N in normal_subgroups(s4_2.S) if N.order == 2][0]
    with pytest.raises(FusionError):
        quotient_system(s4_2, Z)


def test_subsystem_relations(s4_2):
    N = normalizer_subsystem(s4_2)
    assert is_subsystem(s4_2, N)
    assert is_subsystem(s4_2, trivial_subsystem(s4_2))
    assert not is_subsystem(N, s4_2)
    G = s4_2.G
    assert intermediate_subsystem(s4_2, G).G == G
    with pytest.raises(FusionError):
        intermediate_subsystem(s4_2, focal_subgroup(s4_2))


def test_hom_set_witnesses(a4_2):
    F = a4_2
    for P in F.subgroups:
        for m in F.hom_set(P, F.S):
            g = m.witness
            assert all(F.G.group.conj(g, x) == m(x) for x in P.elements)
