"""Degree-one cohomology: how Burnside elements act on Hom(S, A) for a
trivial-action abelian p-group A, and the transfer maps of fusion systems
built from that action.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .burnside import (
    BurnsideElement,
    characteristic_biset,
    characteristic_idempotent,
    default_precision,
    epsilon,
    verify_characteristic,
)
from .fusion import (
    AmbientFusionSystem,
    FusionSystem,
    focal_subgroup,
    hyperfocal_subgroup,
    p_power_index_subsystem,
    trivial_subsystem,
)
from .groups import (
    FiniteGroup,
    GroupError,
    Quotient,
    Subgroup,
    all_subgroups,
    commutator_subgroup,
    coset_data,
    derived_subgroup,
    intersection,
    join,
    normal_subgroups,
    prime_divisors,
    quotient_group,
)


class TransferError(GroupError):
    pass


@dataclass(frozen=True)
class DegreeOneClass:
    """A homomorphism S -> A into an abelian p-group, as images aligned with S.elements."""

    source: Subgroup
    coefficients: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[self._pos[x]]

    @property
    def _pos(self) -> dict[int, int]:
        pos = self.__dict__.get("_pos_cache")
        if pos is None:
            pos = {x: i for i, x in enumerate(self.source.elements)}
            object.__setattr__(self, "_pos_cache", pos)
        return pos

    def on_generators(self) -> dict[int, int]:
        return {g: self(g) for g in self.source.generators}

    def is_homomorphism(self) -> bool:
        mul, amul = self.source.group.mul, self.coefficients.mul
        return all(
            self(mul[x][y]) == amul[self(x)][self(y)]
            for x in self.source.elements
            for y in self.source.elements
        )

    def kernel(self) -> Subgroup:
        return Subgroup(self.source.group, (x for x, v in zip(self.source.elements, self.images) if v == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.coefficients, self.images)

    def scaled(self, r: int) -> DegreeOneClass:
        power = self.coefficients.power
        return DegreeOneClass(self.source, self.coefficients, tuple(power(v, r) for v in self.images))


def exponent(A: FiniteGroup) -> int:
    e = 1
    for o in A.orders:
        e = max(e, o)
    return e


def projection_class(Q: Quotient, S: Subgroup) -> DegreeOneClass:
    """The canonical projection S -> S/K as a degree-one class."""
    return DegreeOneClass(S, Q.group, tuple(Q(x) for x in S.elements))


def _check_coefficients(A: FiniteGroup) -> None:
    if not A.is_abelian:
        raise TransferError("coefficient group must be abelian")
    if len(prime_divisors(A.order)) > 1:
        raise TransferError("coefficient group must be a p-group")


def degree_one_transfer(
    S: Subgroup,
    P: Subgroup,
    f: Sequence[int],
    A: FiniteGroup,
    rng: random.Random | None = None,
) -> tuple[int, ...]:
    """tr from P to S of f: P -> A, as images aligned with S.elements.

    The value at x is the sum over a left transversal t of f((x.t)^-1 x t).
    """
    cd = coset_data(S, P, rng)
    f_of = dict(zip(P.elements, f))
    amul = A.mul
    out = []
    for x in S.elements:
        total = 0
        for t in cd.transversal:
            total = amul[total][f_of[cd.residue(x, t)]]
        out.append(total)
    return tuple(out)


def h1_action(
    X: BurnsideElement, f: DegreeOneClass, rng: random.Random | None = None
) -> DegreeOneClass:
    """The map Hom(target, A) -> Hom(source, A) induced by X in A(source, target).

    [P, phi] sends f to the transfer from P to the source of f o phi.  The
    action reverses composition: acting by X o Y is acting by X, then by Y.
    """
    if f.source != X.target:
        raise TransferError("class must be defined on the target of the Burnside element")
    A = f.coefficients
    _check_coefficients(A)
    if X.modulus is not None and X.modulus % exponent(A):
        raise TransferError(
            f"precision {X.modulus} is too low for coefficients of exponent {exponent(A)}"
        )
    S = X.source
    amul, power = A.mul, A.power
    total = [0] * S.order
    for gen, c in X.terms():
        P = Subgroup(S.group, gen.P)
        pulled = tuple(f(v) for v in gen.images)
        tr = degree_one_transfer(S, P, pulled, A, rng)
        for i, v in enumerate(tr):
            total[i] = amul[total[i]][power(v, c)]
    return DegreeOneClass(S, A, tuple(total))


def group_verlagerung(G: Subgroup | FiniteGroup, S: Subgroup) -> DegreeOneClass:
    """The classical transfer G -> S/S' restricted to S.

    Right cosets S t: for each t, t x = s_t t' with t' the representative of
    S t x; the value at x is the product of the s_t modulo S'.
    """
    if isinstance(G, FiniteGroup):
        G = G.whole
    if not S <= G:
        raise TransferError("S is not a subgroup of G")
    group = S.group
    mul, inv = group.mul, group.inv
    Q = quotient_group(S, derived_subgroup(S))
    rep: dict[int, int] = {}
    reps = []
    for g in G.elements:
        if g in rep:
            continue
        reps.append(g)
        for s in S.members:
            rep[mul[s][g]] = g
    amul = Q.group.mul
    out = []
    for x in S.elements:
        total = 0
        for t in reps:
            tx = mul[t][x]
            s = mul[tx][inv[rep[tx]]]
            total = amul[total][Q(s)]
        out.append(total)
    return DegreeOneClass(S, Q.group, tuple(out))


def _induced_endomorphism(tau: DegreeOneClass, Q: Quotient) -> tuple[int, ...]:
    """tau viewed on S/K through the coset lifts (tau kills K)."""
    return tuple(tau(Q.lifts[a]) for a in range(Q.group.order))


@dataclass
class TransferMap:
    """tau: S -> S/[S, H] obtained by acting with a characteristic element on the projection."""

    cls: DegreeOneClass
    quotient: Quotient
    provenance: str
    kernel: Subgroup
    image: Subgroup
    epsilon: int
    kernel_matches_focal: bool
    almost_idempotent: bool
    focal: Subgroup = field(repr=False)

    def __call__(self, x: int) -> int:
        return self.cls(x)

    @property
    def source(self) -> Subgroup:
        return self.cls.source

    def image_preimage(self) -> Subgroup:
        """The subgroup of S containing [S, H] that maps onto the image."""
        return self.quotient.preimage(self.image)


def transfer_map(
    F: FusionSystem,
    H: FusionSystem | None = None,
    X: BurnsideElement | None = None,
    check_characteristic: bool = False,
    provenance: str | None = None,
) -> TransferMap:
    """The transfer from H to F with respect to X (default: the ambient group as a biset)."""
    S = F.S
    if H is None:
        H = trivial_subsystem(F)
    if H.S != S:
        raise TransferError("subsystem must live on the same p-group")
    if X is None:
        X = characteristic_biset(F)
        provenance = provenance or "ambient group biset"
    if X.source != S or X.target != S:
        raise TransferError("characteristic element must lie in A(S, S)")
    if check_characteristic and not verify_characteristic(F, X).ok:
        raise TransferError("element is not characteristic for the fusion system")
    Q = quotient_group(S, focal_subgroup(H))
    tau = h1_action(X, projection_class(Q, S))
    focal = focal_subgroup(F)
    kernel = tau.kernel()
    eps = epsilon(X)
    endo = _induced_endomorphism(tau, Q)
    power = Q.group.power
    almost = all(endo[endo[a]] == power(endo[a], eps) for a in range(Q.group.order))
    return TransferMap(
        cls=tau,
        quotient=Q,
        provenance=provenance or "supplied element",
        kernel=kernel,
        image=tau.image(),
        epsilon=eps,
        kernel_matches_focal=kernel == focal,
        almost_idempotent=almost,
        focal=focal,
    )


def transfer_image_subgroup(F: FusionSystem, X: BurnsideElement | None = None) -> Subgroup:
    """The subgroup T of S containing S' with T/S' the image of the transfer from S to F."""
    return transfer_map(F, None, X).image_preimage()


def find_unit_scalar(a: DegreeOneClass, b: DegreeOneClass, p: int, modulus: int) -> int | None:
    """Least r prime to p, 0 < r < modulus, with a = r b; None when there is none."""
    if a.source != b.source or len(a.images) != len(b.images):
        raise TransferError("classes live on different groups")
    power = b.coefficients.power
    for r in range(1, modulus):
        if r % p and all(power(v, r) == w for v, w in zip(b.images, a.images)):
            return r
    return None


@dataclass(frozen=True)
class DecompositionReport:
    direct: bool
    cyclic_clause: bool | None  # None when the cyclic hypothesis does not apply

    @property
    def ok(self) -> bool:
        return self.direct and self.cyclic_clause is not False


def check_decomposition(
    F: FusionSystem, H: FusionSystem, X: BurnsideElement | None = None
) -> DecompositionReport:
    """S/[S,H] as the internal direct product of [S,F]/[S,H] and T[S,H]/[S,H]."""
    S = F.S
    SH = focal_subgroup(H)
    SF = focal_subgroup(F)
    T = transfer_image_subgroup(F, X)
    TSH = join(T, SH)
    direct = SH <= SF and intersection(SF, TSH) == SH and join(SF, TSH) == S
    Q = quotient_group(S, SH).group
    cyclic = any(o == Q.order for o in Q.orders)
    clause = (SH == SF) if (cyclic and SF < S) else None
    return DecompositionReport(direct, clause)


@dataclass(frozen=True)
class SquareReport:
    commutes: bool
    image_contained: bool

    @property
    def ok(self) -> bool:
        return self.commutes and self.image_contained


def check_transfer_square(
    F: AmbientFusionSystem, N: Subgroup, k: int | None = None
) -> SquareReport:
    """Compare the transfer from S to F on N with the transfer from N to F_N pushed into S/S'."""
    S = F.S
    if not (hyperfocal_subgroup(F) <= N and N.is_normal_in(S)):
        raise TransferError("need the hyperfocal subgroup inside N and N normal in S")
    if k is None:
        k = default_precision(F, N)
    FN = p_power_index_subsystem(F, N)
    tS = transfer_map(F, None, characteristic_idempotent(F, k), provenance="idempotent")
    tN = transfer_map(FN, None, characteristic_idempotent(FN, k), provenance="idempotent")
    QS, QN = tS.quotient, tN.quotient
    rho = [QS(QN.lifts[a]) for a in range(QN.group.order)]
    commutes = all(tS(n) == rho[tN(n)] for n in N.elements)
    contained = {rho[a] for a in tN.image.members} <= tS.image.members
    return SquareReport(commutes, contained)


@dataclass
class SectionFiveReport:
    conjugation_invariant: bool = True
    image_normal: bool = True
    intersection_formula: bool = True
    direct_products: bool = True
    normal_cases: int = 0
    intersection_cases: int = 0
    pair_cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.conjugation_invariant
            and self.image_normal
            and self.intersection_formula
            and self.direct_products
        )


def _t_subgroup(F: FusionSystem, k: int) -> tuple[TransferMap, Subgroup]:
    tm = transfer_map(F, None, characteristic_idempotent(F, k), provenance="idempotent")
    return tm, tm.image_preimage()


def check_section5(F: AmbientFusionSystem) -> SectionFiveReport:
    """Conjugation invariance and normality of the transfer images of the p-power
    index subsystems, the intersection formula, and the direct-product splitting
    of S/V, over every admissible normal subgroup and every admissible pair."""
    S = F.S
    group = S.group
    hyper = hyperfocal_subgroup(F)
    focal = focal_subgroup(F)
    report = SectionFiveReport()
    admissible = [N for N in normal_subgroups(S) if hyper <= N]
    k = max(default_precision(F, N) for N in admissible)
    _, TF = _t_subgroup(F, k)
    T_of: dict[Subgroup, Subgroup] = {}
    for N in admissible:
        FN = p_power_index_subsystem(F, N)
        tN, TN = _t_subgroup(FN, k)
        T_of[N] = TN
        report.normal_cases += 1
        QN = tN.quotient
        for s in S.elements:
            # tau_N(s n s^-1) must be the image of tau_N(n) under conjugation by s
            for n in N.generators:
                lhs = tN(group.conj(s, n))
                rhs = QN(group.conj(s, QN.lifts[tN(n)]))
                if lhs != rhs:
                    report.conjugation_invariant = False
                    report.failures.append(f"conjugation invariance, |N|={N.order}")
                    break
        if not TN.is_normal_in(S):
            report.image_normal = False
            report.failures.append(f"image not normal, |N|={N.order}")
        if focal <= N:
            report.intersection_cases += 1
            if intersection(TF, N) != join(TN, derived_subgroup(S)):
                report.intersection_formula = False
                report.failures.append(f"intersection formula, |N|={N.order}")
    for U in admissible:
        lower = join(T_of[U], commutator_subgroup(U, S))
        for V in all_subgroups(U):
            if not lower <= V:
                continue
            report.pair_cases += 1
            TV = join(TF, V)
            if not (V.is_normal_in(S) and intersection(U, TV) == V and join(U, TV) == S):
                report.direct_products = False
                report.failures.append(f"direct product, |U|={U.order}, |V|={V.order}")
    return report
