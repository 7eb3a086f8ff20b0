"""Executable theorem checks.  Each returns a :class:`TheoremReport` whose
verdict is True when the statement holds on the instance, with enough
witness data to recompute the verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .fusion import (
    AmbientFusionSystem,
    FusionSystem,
    controls_transfer,
    elementary_focal_subgroup,
    focal_subgroup,
    hyperfocal_subgroup,
    intermediate_subsystem,
    is_invariant,
    is_strongly_closed,
    is_trivial,
    normalizer_subsystem,
    p_power_index_subsystem,
    quotient_system,
)
from .groups import (
    GroupError,
    Subgroup,
    derived_subgroup,
    frattini_subgroup,
    has_wreath_quotient,
    is_isomorphism,
    join,
    normal_subgroups,
    overgroups,
    p_residual,
    structure_profile,
    wreath_group,
)


@dataclass
class TheoremReport:
    theorem: str
    instance: str
    verdict: bool
    summary: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.verdict else "FAIL"
        return f"[{mark}] {self.theorem} on {self.instance}: {self.summary}"


def describe(F: FusionSystem, extra: str = "") -> str:
    name = getattr(F.S.group, "name", None) or "?"
    base = f"{name}, p={F.p}, |S|={F.S.order}"
    return f"{base}, {extra}" if extra else base


def tate_check(F: FusionSystem, H: FusionSystem, label: str = "H") -> TheoremReport:
    """The three residual comparisons between F and a subsystem H on S must agree."""
    if H.S != F.S:
        raise GroupError("tate_check needs a subsystem on the same p-group")
    pairs = {
        "elementary_focal": (elementary_focal_subgroup(F), elementary_focal_subgroup(H)),
        "focal": (focal_subgroup(F), focal_subgroup(H)),
        "hyperfocal": (hyperfocal_subgroup(F), hyperfocal_subgroup(H)),
    }
    flags = {k: a == b for k, (a, b) in pairs.items()}
    same = len(set(flags.values())) == 1
    state = "all equal" if all(flags.values()) else ("all differ" if same else "mixed")
    return TheoremReport(
        "tate",
        describe(F, label),
        same,
        state,
        {"equalities": flags, "orders": {k: (a.order, b.order) for k, (a, b) in pairs.items()}},
    )


def tate_suite(F: AmbientFusionSystem) -> list[TheoremReport]:
    """tate_check against F_S(H0) for every S <= H0 <= G."""
    out = []
    for H0 in overgroups(F.G, F.S):
        H = intermediate_subsystem(F, H0)
        rep = tate_check(F, H, f"H0 of order {H0.order}")
        rep.witness["H0_order"] = H0.order
        out.append(rep)
    return out


def yoshida_check(F: AmbientFusionSystem) -> TheoremReport:
    """If N_F(S) does not control transfer, S must map onto C_p wr C_p."""
    N = normalizer_subsystem(F)
    if controls_transfer(F, N):
        return TheoremReport("yoshida", describe(F), True, "vacuous: N_F(S) controls transfer")
    witness = has_wreath_quotient(F.S, F.p)
    if witness is None:
        return TheoremReport(
            "yoshida", describe(F), False, "control fails and no wreath quotient exists"
        )
    verified = witness.kernel.is_normal_in(F.S) and is_isomorphism(
        wreath_group(F.p), witness.quotient.group, witness.isomorphism
    )
    return TheoremReport(
        "yoshida",
        describe(F),
        verified,
        f"control fails; wreath quotient with |K|={witness.kernel.order}",
        {"kernel": witness.kernel, "focal": focal_subgroup(F), "focal_NFS": focal_subgroup(N)},
    )


def wreath_lemma_check(R: Subgroup, E: Subgroup, x: int, z: int, p: int) -> bool:
    """The norm of x under z either vanishes or R maps onto C_p wr C_p."""
    G = R.group
    if not (E <= R and R.order == p * E.order and E.is_normal_in(R)):
        raise GroupError("E must be a normal subgroup of index p in R")
    if not E.is_abelian or any(G.power(e, p) != 0 for e in E.members):
        raise GroupError("E must be elementary abelian")
    if x not in E or z not in R or z in E:
        raise GroupError("need x in E and z in R outside E")
    return wreath_norm(R, x, z, p) == 0 or has_wreath_quotient(R, p) is not None


def wreath_norm(R: Subgroup, x: int, z: int, p: int) -> int:
    """The product of z^-i x z^i for i = 0..p-1."""
    G = R.group
    zi = G.inv[z]
    total = 0
    for i in range(p):
        total = G.mul[total][G.mul[G.mul[G.power(zi, i)][x]][G.power(z, i)]]
    return total


def has_normal_p_complement(F: AmbientFusionSystem) -> bool:
    """Group-theoretic oracle: O^p(G) has order prime to p."""
    return p_residual(F.G, F.p).order % F.p != 0


def p_nilpotency_check(F: AmbientFusionSystem) -> TheoremReport:
    """Restriction on H^1 with F_p coefficients is an isomorphism exactly when F
    is trivial, and that matches the existence of a normal p-complement."""
    E = elementary_focal_subgroup(F)
    phi = frattini_subgroup(F.S)
    iso = E == phi
    trivial = is_trivial(F)
    complement = has_normal_p_complement(F)
    ok = (not iso or trivial) and iso == complement and trivial == complement
    return TheoremReport(
        "p-nilpotency",
        describe(F),
        ok,
        f"restriction iso={iso}, trivial={trivial}, normal complement={complement}",
        {"elementary_focal": E, "frattini": phi},
    )


def corollary_suite(F: AmbientFusionSystem) -> list[TheoremReport]:
    """Structural sufficient conditions for control of transfer by N_F(S), and
    proper focal subgroups for nonabelian metacyclic S at odd p."""
    S, p = F.S, F.p
    prof = structure_profile(S, p)
    conditions = {
        "class below p": prof.nilpotency_class < p,
        "exponent at most p": prof.exponent <= p,
        "regular": prof.is_regular,
        "odd p, metacyclic": p % 2 == 1 and prof.is_metacyclic,
    }
    out = []
    fired = [name for name, on in conditions.items() if on]
    if fired:
        control = controls_transfer(F, normalizer_subsystem(F))
        for name in fired:
            out.append(
                TheoremReport(
                    f"control ({name})", describe(F), control, f"N_F(S) controls transfer: {control}"
                )
            )
    if p % 2 == 1 and prof.is_metacyclic and not prof.is_abelian:
        proper = focal_subgroup(F) < S
        out.append(
            TheoremReport(
                "proper focal (nonabelian metacyclic)",
                describe(F),
                proper,
                f"|focal|={focal_subgroup(F).order} < |S|={S.order}: {proper}",
            )
        )
    return out


def appendix_suite(F: AmbientFusionSystem) -> list[TheoremReport]:
    """Focal versus hyperfocal, closure of the p-power index subsystems, and
    the trivial-quotient containment."""
    S = F.S
    focal, hyper = focal_subgroup(F), hyperfocal_subgroup(F)
    out = [
        TheoremReport(
            "focal = S' hyperfocal",
            describe(F),
            focal == join(derived_subgroup(S), hyper),
            f"|focal|={focal.order}, |hyperfocal|={hyper.order}",
        )
    ]
    bottom = p_power_index_subsystem(F, hyper, check=False)
    out.append(
        TheoremReport(
            "hyperfocal idempotent",
            describe(F),
            hyperfocal_subgroup(bottom) == hyper,
            f"|hyperfocal of the smallest p-power index subsystem|={hyperfocal_subgroup(bottom).order}",
        )
    )
    closed_ok = True
    quotient_ok = True
    checked = 0
    for N in normal_subgroups(S):
        if hyper <= N:
            sub = p_power_index_subsystem(F, N, check=False)
            if not (is_strongly_closed(F, N) and is_invariant(F, sub)):
                closed_ok = False
        if is_strongly_closed(F, N):
            checked += 1
            if is_trivial(quotient_system(F, N)) and not hyper <= N:
                quotient_ok = False
    out.append(
        TheoremReport(
            "p-power index subsystems invariant", describe(F), closed_ok, "over all admissible N"
        )
    )
    out.append(
        TheoremReport(
            "trivial quotient contains hyperfocal",
            describe(F),
            quotient_ok,
            f"{checked} strongly closed normal subgroups",
        )
    )
    return out

