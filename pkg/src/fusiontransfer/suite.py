"""The acceptance batteries, one function per criterion.  Each sweeps the
catalog, counts checks, collects failures and records elapsed time against a
fixed budget."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .burnside import (
    IDEMPOTENT_ORDER_BOUND,
    characteristic_biset,
    characteristic_idempotent,
    check_conjugation_commutation,
    check_idempotent_commutation,
    compose,
    default_precision,
    epsilon,
    idempotent_from,
    is_left_stable,
    is_right_stable,
    opposite,
    random_element,
    seed_multiplier,
)
from .catalog import catalog, catalog_group
from .fusion import (
    AmbientFusionSystem,
    fusion_system,
    hyperfocal_subgroup,
    intermediate_subsystem,
    normalizer_subsystem,
    trivial_subsystem,
)
from .groups import MAX_ORDER, normal_subgroups, overgroups, prime_divisors, structure_profile
from .theorems import (
    appendix_suite,
    corollary_suite,
    p_nilpotency_check,
    tate_check,
    yoshida_check,
)
from .transfer import (
    check_decomposition,
    check_section5,
    check_transfer_square,
    find_unit_scalar,
    group_verlagerung,
    transfer_map,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    budget: float
    checks: int = 0
    elapsed: float = 0.0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checks > 0 and self.elapsed <= self.budget

    def record(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.failures:
            extra = f"; first failure: {self.failures[0]}"
        elif self.elapsed > self.budget:
            extra = "; over time budget"
        return (
            f"[{mark}] criterion {self.number}: {self.title} "
            f"({self.checks} checks, {self.elapsed:.1f}s of {self.budget:.0f}s){extra}"
        )


def instances(max_order: int = MAX_ORDER) -> Iterator[tuple[str, AmbientFusionSystem]]:
    """(name, F_S(G)) for every catalog group up to ``max_order`` and every prime divisor."""
    for name, G in catalog(max_order):
        for p in prime_divisors(G.order):
            yield f"{name} p={p}", fusion_system(G, p)


def _timed(fn: Callable[[CriterionResult], None], result: CriterionResult) -> CriterionResult:
    start = time.perf_counter()
    fn(result)
    result.elapsed = time.perf_counter() - start
    return result


def tate_battery(max_order: int = 100) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            for H0 in overgroups(F.G, F.S):
                rep = tate_check(F, intermediate_subsystem(F, H0))
                res.record(rep.verdict, f"{label}, |H0|={H0.order}: {rep.summary}")

    return _timed(body, CriterionResult(1, "residual comparisons agree for all intermediate subsystems", 120))


def yoshida_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        positive = vacuous_regular = 0
        for label, F in instances(max_order):
            rep = yoshida_check(F)
            res.record(rep.verdict, f"{label}: {rep.summary}")
            if "fails" in rep.summary:
                positive += 1
            prof = structure_profile(F.S, F.p)
            if prof.is_regular or prof.exponent <= F.p:
                ok = rep.summary.startswith("vacuous")
                res.record(ok, f"{label}: regular or exponent p but control fails")
                vacuous_regular += ok
        F = fusion_system(catalog_group("symmetric:4"), 2)
        rep = yoshida_check(F)
        res.record(
            rep.verdict and rep.witness.get("kernel") is not None and rep.witness["kernel"].order == 1,
            "symmetric:4 p=2 must give a wreath quotient with trivial kernel",
        )
        res.notes.append(f"{positive} instances with control failure, {vacuous_regular} regular vacuous")

    return _timed(body, CriterionResult(2, "control failure forces a wreath quotient", 60))


def transfer_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            subsystems = [("trivial", trivial_subsystem(F)), ("normalizer", normalizer_subsystem(F))]
            subsystems += [
                (f"H0 of order {H0.order}", intermediate_subsystem(F, H0))
                for H0 in overgroups(F.G, F.S)
            ]
            small = F.S.order <= IDEMPOTENT_ORDER_BOUND
            omega = characteristic_idempotent(F) if small else None
            for name, H in subsystems:
                tm = transfer_map(F, H)
                res.record(tm.kernel_matches_focal, f"{label}, {name}: kernel differs from focal")
                res.record(tm.almost_idempotent, f"{label}, {name}: tau o tau != eps tau")
                res.record(check_decomposition(F, H).ok, f"{label}, {name}: decomposition")
                if omega is not None:
                    tw = transfer_map(F, H, omega)
                    r = find_unit_scalar(tw.cls, tm.cls, F.p, omega.modulus)
                    res.record(
                        r is not None and tw.kernel == tm.kernel and tw.image.members == tm.image.members,
                        f"{label}, {name}: no unit scalar relates the two transfers",
                    )

    return _timed(body, CriterionResult(3, "transfer kernel, near-idempotence, splitting, scalar", 60))


def verlagerung_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            tm = transfer_map(F)
            v = group_verlagerung(F.G, F.S)
            res.record(tm.cls.images == v.images, f"{label}: Burnside action differs from Verlagerung")

    return _timed(body, CriterionResult(4, "group biset action equals the classical transfer", 30))


def idempotent_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            if F.S.order > IDEMPOTENT_ORDER_BOUND:
                continue
            k = default_precision(F)
            w = characteristic_idempotent(F, k)
            res.record(compose(w, w) == w, f"{label}: not idempotent")
            res.record(epsilon(w) == 1 % w.modulus, f"{label}: augmentation is not 1")
            res.record(is_left_stable(F, w), f"{label}: not left stable")
            res.record(is_right_stable(F, w), f"{label}: not right stable")
            other = idempotent_from(seed_multiplier(F.p) * characteristic_biset(F), F.p, k)
            res.record(other == w, f"{label}: depends on the seed")

    return _timed(body, CriterionResult(5, "characteristic idempotents mod p^k", 300))


def commutation_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        seen_s4 = False
        for label, F in instances(max_order):
            if F.S.order > IDEMPOTENT_ORDER_BOUND:
                continue
            hyper = hyperfocal_subgroup(F)
            for N in normal_subgroups(F.S):
                if not hyper <= N:
                    continue
                tag = f"{label}, |N|={N.order}"
                seen_s4 |= label == "symmetric:4 p=2" and N.order == 4
                res.record(check_idempotent_commutation(F, N).ok, f"{tag}: idempotents do not commute")
                res.record(check_transfer_square(F, N).ok, f"{tag}: transfer square")
                res.record(check_conjugation_commutation(F, N), f"{tag}: conjugation")
        res.record(seen_s4, "symmetric:4 with the Klein four subgroup was not covered")

    return _timed(body, CriterionResult(6, "idempotents of p-power index subsystems commute", 120))


def section5_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            if F.S.order <= IDEMPOTENT_ORDER_BOUND:
                rep = check_section5(F)
                res.record(rep.ok, f"{label}: {rep.failures[:1]}")
            for r in appendix_suite(F):
                res.record(r.verdict, f"{label}: {r.theorem}")

    return _timed(body, CriterionResult(7, "transfer images, splittings and residual closure", 120))


def nilpotency_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            rep = p_nilpotency_check(F)
            res.record(rep.verdict, f"{label}: {rep.summary}")

    return _timed(body, CriterionResult(8, "H^1 restriction test matches normal p-complements", 30))


RING_GROUPS = ("cyclic:4", "dihedral:8", "quaternion:8", "product:cyclic:3xcyclic:3")


def ring_battery(trials: int = 1000, seed: int = 20261016) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        rng = random.Random(seed)
        spaces = []
        for name in RING_GROUPS:
            G = catalog_group(name)
            spaces.append((name, G.whole))
        for i in range(trials):
            name, S = spaces[i % len(spaces)]
            X, Y, Z = (random_element(S, S, rng, terms=rng.randint(1, 3)) for _ in range(3))
            res.record(
                compose(compose(X, Y), Z) == compose(X, compose(Y, Z)),
                f"{name} trial {i}: associativity",
            )
            res.record(
                epsilon(compose(X, Y)) == epsilon(X) * epsilon(Y),
                f"{name} trial {i}: augmentation not multiplicative",
            )
            res.record(
                opposite(compose(X, Y)) == compose(opposite(Y), opposite(X)),
                f"{name} trial {i}: opposite is not an anti-homomorphism",
            )
            res.record(
                compose(X, Y, rng=rng) == compose(X, Y),
                f"{name} trial {i}: composition depends on double coset representatives",
            )

    return _timed(body, CriterionResult(9, "double Burnside ring sanity", 60))


def corollary_battery(max_order: int = MAX_ORDER) -> CriterionResult:
    """Structural control-of-transfer conditions (not a numbered criterion)."""

    def body(res: CriterionResult) -> None:
        for label, F in instances(max_order):
            for r in corollary_suite(F):
                res.record(r.verdict, f"{label}: {r.theorem}")

    return _timed(body, CriterionResult(0, "structural control conditions", 60))


BATTERIES: dict[int, Callable[..., CriterionResult]] = {
    1: tate_battery,
    2: yoshida_battery,
    3: transfer_battery,
    4: verlagerung_battery,
    5: idempotent_battery,
    6: commutation_battery,
    7: section5_battery,
    8: nilpotency_battery,
}


def run_all(max_order: int = MAX_ORDER, ring_trials: int = 1000) -> list[CriterionResult]:
    out = []
    for number, battery in BATTERIES.items():
        out.append(battery(min(max_order, 100)) if number == 1 else battery(max_order))
    out.append(ring_battery(ring_trials))
    out.append(corollary_battery(max_order))
    return out

