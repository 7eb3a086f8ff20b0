"""Fusion systems realized by an ambient finite group, and the constructions
built from them: residual subgroups, subsystems, quotients.

Every system here comes from conjugation in a group with S as a Sylow
p-subgroup (or is a quotient of such a system), so saturation never needs to
be checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .groups import (
    FiniteGroup,
    GroupError,
    GroupHom,
    Quotient,
    Subgroup,
    all_subgroups,
    as_subgroup,
    cyclic_subgroups,
    frattini_subgroup,
    generate_subgroup,
    intersection,
    is_p_group,
    join,
    normalizer,
    p_part,
    p_residual,
    quotient_group,
    sylow_subgroup,
)

Map = tuple  # images aligned with P.elements


class FusionError(GroupError):
    pass


class FusionMorphism(GroupHom):
    """An injective map P -> Q in a fusion system, with the ambient element
    (or, for quotient systems, the lifted ambient element) that realizes it."""

    def __init__(self, domain: Subgroup, codomain: Subgroup, mapping: Sequence[int], witness: int):
        super().__init__(domain, codomain, mapping)
        self.witness = witness


class FusionSystem:
    """Common interface: a prime, a p-group S, and morphism sets between subgroups."""

    kind = "abstract"

    def __init__(self, p: int, S: Subgroup):
        if not is_p_group(S, p):
            raise FusionError(f"S is not a {p}-group")
        self.p = p
        self.S = S
        self._maps_cache: dict[tuple[Subgroup, Subgroup], dict[Map, int]] = {}

    def _compute_maps(self, P: Subgroup, Q: Subgroup) -> dict[Map, int]:
        raise NotImplementedError

    def maps(self, P: Subgroup, Q: Subgroup) -> dict[Map, int]:
        """Distinct morphism image tuples P -> Q, each with one witness."""
        key = (P, Q)
        found = self._maps_cache.get(key)
        if found is None:
            found = self._compute_maps(P, Q)
            self._maps_cache[key] = found
        return found

    def hom_set(self, P: Subgroup, Q: Subgroup) -> list[FusionMorphism]:
        if not (P <= self.S and Q <= self.S):
            raise FusionError("hom_set arguments must be subgroups of S")
        return [FusionMorphism(P, Q, m, w) for m, w in sorted(self.maps(P, Q).items())]

    def aut_maps(self, P: Subgroup) -> list[Map]:
        return sorted(self.maps(P, P))

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        return all_subgroups(self.S)


class AmbientFusionSystem(FusionSystem):
    """F_S(G): morphisms are the conjugation maps c_g with g in G."""

    kind = "ambient"

    def __init__(self, p: int, S: Subgroup, G: Subgroup | FiniteGroup):
        G = as_subgroup(G)
        super().__init__(p, S)
        if S.group is not G.group or not S <= G:
            raise FusionError("S is not a subgroup of the ambient group")
        if S.order != p_part(G.order, p):
            raise FusionError("S is not a Sylow subgroup of the ambient group")
        self.G = G

    def __repr__(self) -> str:
        return f"F_S(G) with p={self.p}, |S|={self.S.order}, |G|={self.G.order}"

    def _compute_maps(self, P: Subgroup, Q: Subgroup) -> dict[Map, int]:
        conj = self.G.group.conj
        gens = P.generators
        qm = Q.members
        out: dict[Map, int] = {}
        for g in self.G.elements:
            if all(conj(g, x) in qm for x in gens):
                m = tuple(conj(g, x) for x in P.elements)
                out.setdefault(m, g)
        return out


class QuotientFusionSystem(FusionSystem):
    """F/T on S/T: the maps induced by Hom_F(U, V) for T <= U, V <= S."""

    kind = "quotient"

    def __init__(self, base: FusionSystem, T: Subgroup):
        if not is_strongly_closed(base, T):
            raise FusionError("T is not strongly closed in F")
        self.base = base
        self.T = T
        self.quotient: Quotient = quotient_group(base.S, T)
        super().__init__(base.p, self.quotient.group.whole)

    def __repr__(self) -> str:
        return f"F/T with p={self.p}, |S/T|={self.S.order}"

    def _compute_maps(self, P: Subgroup, Q: Subgroup) -> dict[Map, int]:
        U = self.quotient.preimage(P)
        V = self.quotient.preimage(Q)
        proj = self.quotient.projection.as_dict
        lifts = self.quotient.lifts
        out: dict[Map, int] = {}
        for m, w in self.base.maps(U, V).items():
            f = dict(zip(U.elements, m))
            out.setdefault(tuple(proj[f[lifts[y]]] for y in P.elements), w)
        return out


def fusion_system(G: FiniteGroup | Subgroup, p: int) -> AmbientFusionSystem:
    """F_S(G) on the Sylow p-subgroup chosen by :func:`sylow_subgroup`."""
    G = as_subgroup(G)
    return AmbientFusionSystem(p, sylow_subgroup(G, p), G)


def _check_subgroup_of_S(F: FusionSystem, P: Subgroup) -> None:
    if not P <= F.S:
        raise FusionError("subgroup is not contained in S")


def _compose_maps(P: Subgroup, a: Map, b: Map) -> Map:
    pos = {x: i for i, x in enumerate(P.elements)}
    return tuple(a[pos[y]] for y in b)


@dataclass(frozen=True)
class AutomorphismGroup:
    """Aut_F(P) as a table group, with its elements as maps and the O^p part."""

    P: Subgroup
    group: FiniteGroup
    maps: tuple[Map, ...]  # maps[i] is group element i; index 0 is the identity
    residual: tuple[Map, ...]

    @property
    def order(self) -> int:
        return self.group.order


def aut_F(F: FusionSystem, P: Subgroup) -> AutomorphismGroup:
    _check_subgroup_of_S(F, P)
    identity = P.elements
    maps = sorted(F.maps(P, P), key=lambda m: (m != identity, m))
    index = {m: i for i, m in enumerate(maps)}
    table = [[index[_compose_maps(P, a, b)] for b in maps] for a in maps]
    A = FiniteGroup(table, name=f"Aut_F(P), |P|={P.order}", validate=False)
    residual = p_residual(A, F.p)
    return AutomorphismGroup(P, A, tuple(maps), tuple(maps[i] for i in residual.elements))


def _residual_subgroup(F: FusionSystem, hyper: bool) -> Subgroup:
    G = F.S.group
    mul, inv = G.mul, G.inv
    gens: set[int] = set()
    for P in F.subgroups:
        if P.order == 1:
            continue
        auts = aut_F(F, P).residual if hyper else F.aut_maps(P)
        for alpha in auts:
            for u, au in zip(P.elements, alpha):
                if u != au:
                    gens.add(mul[inv[u]][au])
    return generate_subgroup(G, gens)


def focal_subgroup(F: FusionSystem) -> Subgroup:
    """[S, F] = <u^-1 alpha(u) : P <= S, alpha in Aut_F(P), u in P>."""
    cached = getattr(F, "_focal", None)
    if cached is None:
        cached = F._focal = _residual_subgroup(F, hyper=False)
    return cached


def hyperfocal_subgroup(F: FusionSystem) -> Subgroup:
    """O^p_F(S): as the focal subgroup but with alpha in O^p(Aut_F(P))."""
    cached = getattr(F, "_hyperfocal", None)
    if cached is None:
        cached = F._hyperfocal = _residual_subgroup(F, hyper=True)
    return cached


def elementary_focal_subgroup(F: FusionSystem) -> Subgroup:
    """Phi(S)[S, F]; also checked to equal Phi(S) O^p_F(S)."""
    phi = frattini_subgroup(F.S)
    E = join(phi, focal_subgroup(F))
    if E != join(phi, hyperfocal_subgroup(F)):
        raise FusionError("Phi(S)[S,F] differs from Phi(S)O^p_F(S)")
    return E


def ambient_hyperfocal_oracle(F: AmbientFusionSystem) -> Subgroup:
    """S intersected with O^p(G), the group-theoretic value of the hyperfocal subgroup."""
    return intersection(F.S, p_residual(F.G, F.p))


def normalizer_subsystem(F: AmbientFusionSystem) -> AmbientFusionSystem:
    """N_F(S), realized as F_S(N_G(S))."""
    _require_ambient(F)
    return AmbientFusionSystem(F.p, F.S, normalizer(F.G, F.S))


def intermediate_subsystem(F: AmbientFusionSystem, H0: Subgroup) -> AmbientFusionSystem:
    _require_ambient(F)
    if not (F.S <= H0 and H0 <= F.G):
        raise FusionError("need S <= H0 <= G")
    return AmbientFusionSystem(F.p, F.S, H0)


def trivial_subsystem(F: FusionSystem) -> AmbientFusionSystem:
    """F_S(S)."""
    return AmbientFusionSystem(F.p, F.S, F.S)


def _require_ambient(F: FusionSystem) -> None:
    if not isinstance(F, AmbientFusionSystem):
        raise FusionError("operation needs an ambient-group fusion system")


def p_power_index_subsystem(
    F: AmbientFusionSystem, N: Subgroup, check: bool = True
) -> AmbientFusionSystem:
    """The p-power index subsystem on N, realized as F_N(N O^p(G)).

    With ``check`` the hyperfocal subgroup of the result is compared with that
    of F, which must agree for every N between them.
    """
    _require_ambient(F)
    hyper = hyperfocal_subgroup(F)
    if not (hyper <= N and N <= F.S):
        raise FusionError("need O^p_F(S) <= N <= S")
    L = join(N, p_residual(F.G, F.p))
    sub = AmbientFusionSystem(F.p, N, L)
    if check and hyperfocal_subgroup(sub) != hyper:
        raise FusionError("hyperfocal subgroup changed in the p-power index subsystem")
    return sub


def is_strongly_closed(F: FusionSystem, T: Subgroup) -> bool:
    """Whether every F-image of a subgroup of T stays in T.

    Checking cyclic subgroups suffices: a subgroup of T is generated by its
    elements, and phi(<x>) <= T for all of them forces phi(P) <= T.
    """
    _check_subgroup_of_S(F, T)
    for C in cyclic_subgroups(T):
        for m in F.maps(C, F.S):
            if not T.members.issuperset(m):
                return False
    return True


def quotient_system(F: FusionSystem, T: Subgroup) -> QuotientFusionSystem:
    return QuotientFusionSystem(F, T)


def is_trivial(F: FusionSystem) -> bool:
    """Whether F = F_S(S): every morphism into S is conjugation by an element of S."""
    conj = F.S.group.conj
    for P in F.subgroups:
        inner = {tuple(conj(s, x) for x in P.elements) for s in F.S.elements}
        if any(m not in inner for m in F.maps(P, F.S)):
            return False
    return True


def is_subsystem(F: FusionSystem, H: FusionSystem) -> bool:
    """Whether every morphism of H (on T <= S) is a morphism of F."""
    if not H.S <= F.S:
        return False
    for P in H.subgroups:
        fmaps = F.maps(P, F.S)
        if any(m not in fmaps for m in H.maps(P, H.S)):
            return False
    return True


def is_invariant(F: FusionSystem, H: FusionSystem) -> bool:
    """Whether the subsystem H on T is F-invariant.

    T must be strongly F-closed, and for every F-morphism phi and every
    chi in Hom_H(U, V), phi chi phi^-1 must lie in Hom_H(phi U, phi V).  A
    triple (phi, U, chi) only involves phi on Q = <U, chi(U)>, so it is enough
    to range over those Q and all phi in Hom_F(Q, S).
    """
    T = H.S
    if not is_strongly_closed(F, T):
        raise FusionError("subsystem lives on a subgroup that is not strongly closed")
    for U in H.subgroups:
        for chi in H.maps(U, T):
            Q = generate_subgroup(T.group, U.generators + tuple(chi))
            chi_of = dict(zip(U.elements, chi))
            for phi in F.maps(Q, F.S):
                phi_of = dict(zip(Q.elements, phi))
                phiU = Subgroup(T.group, (phi_of[u] for u in U.elements))
                # (phi chi phi^-1)(phi(u)) = phi(chi(u))
                conjugated = {phi_of[u]: phi_of[chi_of[u]] for u in U.elements}
                m = tuple(conjugated[y] for y in phiU.elements)
                if m not in H.maps(phiU, T):
                    return False
    return True


def controls_transfer(F: FusionSystem, H: FusionSystem) -> bool:
    """[S, H] = [S, F]."""
    return focal_subgroup(H) == focal_subgroup(F)
