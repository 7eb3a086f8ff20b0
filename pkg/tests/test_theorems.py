import pytest

from fusiontransfer.catalog import catalog_group
from fusiontransfer.fusion import focal_subgroup, fusion_system, trivial_subsystem
from fusiontransfer.groups import GroupError, all_subgroups, generate_subgroup
from fusiontransfer.theorems import (
    appendix_suite,
    corollary_suite,
    has_normal_p_complement,
    p_nilpotency_check,
    tate_check,
    tate_suite,
    wreath_lemma_check,
    wreath_norm,
    yoshida_check,
)


def test_tate_for_s4(s4_2):
    reps = tate_suite(s4_2)
    assert [r.summary for r in reps] == ["all differ", "all equal"]
    assert all(r.verdict for r in reps)
    assert reps[0].witness["equalities"] == {"elementary_focal": False, "focal": False, "hyperfocal": False}


def test_tate_when_nothing_fuses(s3_2):
    assert [r.summary for r in tate_suite(s3_2)] == ["all equal", "all equal"]


def test_tate_needs_same_p_group(s4_2, s3_2):
    with pytest.raises(GroupError):
        tate_check(s4_2, trivial_subsystem(s3_2))


@pytest.mark.parametrize(
    "name,p,kernel",
    [("symmetric:4", 2, 1), ("GL23", 2, 2), ("product:cyclic:2xsymmetric:4", 2, 2), ("alternating:6", 2, 1)],
)
def test_yoshida_positive_instances(name, p, kernel):
    rep = yoshida_check(fusion_system(catalog_group(name), p))
    assert rep.verdict
    assert rep.witness["kernel"].order == kernel
    assert rep.witness["focal"] != rep.witness["focal_NFS"]


@pytest.mark.parametrize("name,p", [("symmetric:3", 2), ("alternating:5", 2), ("extraspecial:27+:2", 3)])
def test_yoshida_vacuous_instances(name, p):
    rep = yoshida_check(fusion_system(catalog_group(name), p))
    assert rep.verdict and rep.summary.startswith("vacuous")


def _elementary_abelian_normal_index_p(R, p):
    G = R.group
    return [
        E
        for E in all_subgroups(R)
        if E.order * p == R.order
        and E.is_normal_in(R)
        and E.is_abelian
        and all(G.power(e, p) == 0 for e in E.members)
    ]


@pytest.mark.parametrize("name,p,wreath", [("product:cyclic:2xcyclic:2", 2, False), ("dihedral:8", 2, True), ("wreath:3", 3, True)])
def test_wreath_lemma(name, p, wreath):
    R = catalog_group(name).whole
    nonzero = 0
    for E in _elementary_abelian_normal_index_p(R, p):
        for x in E.members:
            for z in R.members - E.members:
                assert wreath_lemma_check(R, E, x, z, p)
                nonzero += wreath_norm(R, x, z, p) != 0
    # a nonvanishing norm occurs exactly when R is itself the wreath product
    assert (nonzero > 0) == wreath


def test_wreath_lemma_hypotheses():
    R = catalog_group("quaternion:8").whole
    G = R.group
    C4 = generate_subgroup(G, [G.index("a")])
    with pytest.raises(GroupError):
        wreath_lemma_check(R, C4, G.index("a"), G.index("b"), 2)


def test_p_nilpotency(a4_2, s3_2, s4_2):
    assert not has_normal_p_complement(a4_2)
    rep = p_nilpotency_check(a4_2)
    assert rep.verdict and "iso=False" in rep.summary
    rep = p_nilpotency_check(s3_2)
    assert rep.verdict and "iso=True" in rep.summary
    assert has_normal_p_complement(fusion_system(catalog_group("symmetric:4"), 3)) is False
    assert has_normal_p_complement(fusion_system(catalog_group("cyclic:6"), 3))


def test_structural_conditions():
    plus = fusion_system(catalog_group("extraspecial:27+:2"), 3)
    assert [r.theorem for r in corollary_suite(plus) if r.theorem.startswith("control")] == [
        "control (class below p)",
        "control (exponent at most p)",
        "control (regular)",
    ]
    minus = fusion_system(catalog_group("extraspecial:27-:2"), 3)
    reps = {r.theorem: r for r in corollary_suite(minus)}
    assert reps["proper focal (nonabelian metacyclic)"].verdict
    assert focal_subgroup(minus) < minus.S
    assert all(r.verdict for r in reps.values())


@pytest.mark.parametrize("name,p", [("symmetric:4", 2), ("GL23", 2), ("alternating:5", 2), ("extraspecial:27-:2", 3)])
def test_appendix_statements(name, p):
    reps = appendix_suite(fusion_system(catalog_group(name), p))
    assert len(reps) == 4 and all(r.verdict for r in reps)
