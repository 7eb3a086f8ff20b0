"""The double Burnside module A(G, H) of virtual (G, H)-bisets, restricted to
the span of bisets that are free on the left.

A generator [P, phi] with P <= G and phi: P -> H injective stands for the
biset H x_{(P, phi)} G.  Elements are finite integer combinations of
generators, optionally reduced modulo p^k.  Composition uses the Mackey
double-coset formula

    [Q, psi] o [P, phi] = sum over x in Q \\ K / phi(P) of
                          [phi^-1(phi(P) n Q^x), psi c_x phi]

with Q^x = x^-1 Q x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .fusion import AmbientFusionSystem, FusionError, FusionSystem, p_power_index_subsystem
from .groups import (
    GroupError,
    Subgroup,
    conjugate_subgroup,
    derived_subgroup,
    double_coset_reps,
    intersection,
    p_part,
    quotient_group,
)

IDEMPOTENT_ORDER_BOUND = 32
POWER_CYCLE_CAP = 10_000


class BurnsideError(GroupError):
    pass


@dataclass(frozen=True, order=True)
class BisetGenerator:
    """[P, phi]: ``P`` sorted member tuple, ``images`` aligned with it."""

    P: tuple[int, ...]
    images: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.P)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.P, self.images))


_canon_cache: dict[tuple[int, int, frozenset, frozenset], dict] = {}


def _cache_for(source: Subgroup, target: Subgroup) -> dict:
    key = (id(source.group), id(target.group), source.members, target.members)
    cache = _canon_cache.get(key)
    if cache is None:
        cache = _canon_cache[key] = {}
    return cache


def clear_caches() -> None:
    _canon_cache.clear()
    _mackey_cache.clear()


def canonicalize(
    source: Subgroup, target: Subgroup, P: Iterable[int], phi: Mapping[int, int]
) -> BisetGenerator:
    """The canonical representative of the class of [P, phi] in A(source, target).

    The class is the orbit of (s P s^-1, c_t phi c_s^-1) for s in source and
    t in target; the representative is the lexicographically least
    (sorted P, images) pair.
    """
    Pt = tuple(sorted(P))
    images = tuple(phi[u] for u in Pt)
    cache = _cache_for(source, target)
    hit = cache.get((Pt, images))
    if hit is not None:
        return hit
    if len(set(images)) != len(images):
        raise BurnsideError("biset generator map is not injective")
    sct = source.group.conj_table
    tct = target.group.conj_table
    sinv = source.group.inv
    best_P = None
    stabilizing: list[int] = []
    for s in source.elements:
        Ps = tuple(sorted(sct[s][u] for u in Pt))
        if best_P is None or Ps < best_P:
            best_P, stabilizing = Ps, [s]
        elif Ps == best_P:
            stabilizing.append(s)
    phi_of = dict(zip(Pt, images))
    bases = {tuple(phi_of[sct[sinv[s]][y]] for y in best_P) for s in stabilizing}
    best = None
    for base in bases:
        for t in target.elements:
            row = tct[t]
            img = tuple(row[b] for b in base)
            if best is None or img < best:
                best = img
    gen = BisetGenerator(best_P, best)
    cache[(Pt, images)] = gen
    cache[(best_P, best)] = gen
    return gen


class BurnsideElement:
    """An element of A(source, target), optionally over Z/modulus."""

    __slots__ = ("source", "target", "coeffs", "modulus")

    def __init__(
        self,
        source: Subgroup,
        target: Subgroup,
        coeffs: Mapping[BisetGenerator, int] | None = None,
        modulus: int | None = None,
    ):
        self.source = source
        self.target = target
        self.modulus = modulus
        clean: dict[BisetGenerator, int] = {}
        for g, c in (coeffs or {}).items():
            if modulus is not None:
                c %= modulus
            if c:
                clean[g] = c
        self.coeffs = clean

    def __repr__(self) -> str:
        mod = f" mod {self.modulus}" if self.modulus else ""
        return (
            f"BurnsideElement(|source|={self.source.order}, |target|={self.target.order}, "
            f"{len(self.coeffs)} terms{mod})"
        )

    def _same_space(self, other: BurnsideElement) -> None:
        if self.source != other.source or self.target != other.target:
            raise BurnsideError("elements live in different Burnside modules")

    def _common_modulus(self, other: BurnsideElement) -> int | None:
        if self.modulus is None:
            return other.modulus
        if other.modulus is None or other.modulus == self.modulus:
            return self.modulus
        raise BurnsideError("elements reduced modulo different integers")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.source, self.target, frozenset(self.coeffs.items()), self.modulus))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._same_space(other)
        mod = self._common_modulus(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return BurnsideElement(self.source, self.target, out, mod)

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(
            self.source, self.target, {g: -c for g, c in self.coeffs.items()}, self.modulus
        )

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> BurnsideElement:
        return BurnsideElement(
            self.source, self.target, {g: scalar * c for g, c in self.coeffs.items()}, self.modulus
        )

    def __matmul__(self, other: BurnsideElement) -> BurnsideElement:
        return compose(self, other)

    def reduce(self, modulus: int) -> BurnsideElement:
        if self.modulus is not None and self.modulus % modulus:
            raise BurnsideError(f"cannot reduce modulo {modulus} from modulo {self.modulus}")
        return BurnsideElement(self.source, self.target, self.coeffs, modulus)

    def terms(self) -> list[tuple[BisetGenerator, int]]:
        return sorted(self.coeffs.items())

    def power(self, n: int) -> BurnsideElement:
        if self.source != self.target:
            raise BurnsideError("powers need a square Burnside module")
        result = identity(self.source, self.modulus)
        base = self
        while n:
            if n & 1:
                result = compose(result, base)
            n >>= 1
            if n:
                base = compose(base, base)
        return result


def element(
    source: Subgroup,
    target: Subgroup,
    P: Subgroup,
    phi: Mapping[int, int],
    coeff: int = 1,
    modulus: int | None = None,
) -> BurnsideElement:
    """coeff * [P, phi] in A(source, target)."""
    if not P <= source:
        raise BurnsideError("P is not a subgroup of the source group")
    if not all(phi[u] in target.members for u in P.members):
        raise BurnsideError("phi does not map into the target group")
    gen = canonicalize(source, target, P.members, phi)
    return BurnsideElement(source, target, {gen: coeff}, modulus)


def identity(S: Subgroup, modulus: int | None = None) -> BurnsideElement:
    return element(S, S, S, {x: x for x in S.members}, 1, modulus)


def restriction_biset(N: Subgroup, S: Subgroup, modulus: int | None = None) -> BurnsideElement:
    """[N, incl] in A(N, S); it acts on cohomology as restriction from S to N."""
    return element(N, S, N, {x: x for x in N.members}, 1, modulus)


def transfer_biset(N: Subgroup, S: Subgroup, modulus: int | None = None) -> BurnsideElement:
    """[N, id] in A(S, N); it acts on cohomology as transfer from N to S."""
    return element(S, N, N, {x: x for x in N.members}, 1, modulus)


def conjugation_biset(N: Subgroup, x: int, modulus: int | None = None) -> BurnsideElement:
    """[N, c_x] in A(N, N), for x normalizing N."""
    conj = N.group.conj
    phi = {u: conj(x, u) for u in N.members}
    if not all(v in N.members for v in phi.values()):
        raise BurnsideError("x does not normalize N")
    return element(N, N, N, phi, 1, modulus)


def morphism_biset(
    P: Subgroup, phi: Mapping[int, int], S: Subgroup, modulus: int | None = None
) -> BurnsideElement:
    """[P, phi] in A(P, S) for phi: P -> S."""
    return element(P, S, P, phi, 1, modulus)


def inverse_morphism_biset(
    P: Subgroup, phi: Mapping[int, int], S: Subgroup, modulus: int | None = None
) -> BurnsideElement:
    """[phi(P), phi^-1] in A(S, P)."""
    image = Subgroup(S.group, (phi[u] for u in P.members))
    return element(S, P, image, {phi[u]: u for u in P.members}, 1, modulus)


_mackey_cache: dict[tuple, tuple[BisetGenerator, ...]] = {}


def _mackey(
    K: Subgroup,
    H: Subgroup,
    G: Subgroup,
    gx: BisetGenerator,
    gy: BisetGenerator,
    rng: random.Random | None,
) -> tuple[BisetGenerator, ...]:
    """Terms of [Q, psi] o [P, phi] with [Q, psi] in A(K, H), [P, phi] in A(G, K)."""
    key = None
    if rng is None:
        key = (id(K.group), K.members, id(H.group), H.members, id(G.group), G.members, gx, gy)
        hit = _mackey_cache.get(key)
        if hit is not None:
            return hit
    kgroup = K.group
    kct = kgroup.conj_table
    Q = Subgroup(kgroup, gx.P)
    psi = gx.as_dict()
    phiP = Subgroup(kgroup, gy.images)
    out = []
    for x in double_coset_reps(Q, K, phiP, rng):
        cx = kct[x]  # phi(u) lies in Q^x iff c_x(phi(u)) lies in Q
        new_map = {u: psi[cx[v]] for u, v in zip(gy.P, gy.images) if cx[v] in Q.members}
        out.append(canonicalize(G, H, new_map.keys(), new_map))
    result = tuple(out)
    if key is not None:
        _mackey_cache[key] = result
    return result


def compose(
    X: BurnsideElement, Y: BurnsideElement, rng: random.Random | None = None
) -> BurnsideElement:
    """X o Y for X in A(K, H) and Y in A(G, K), giving an element of A(G, H).

    With ``rng`` the double-coset representatives are drawn at random, which
    must not change the result.
    """
    if X.source != Y.target:
        raise BurnsideError("composition needs the source of X to be the target of Y")
    mod = X._common_modulus(Y)
    out: dict[BisetGenerator, int] = {}
    for gx, cx in X.coeffs.items():
        for gy, cy in Y.coeffs.items():
            c = cx * cy
            for term in _mackey(X.source, X.target, Y.source, gx, gy, rng):
                out[term] = out.get(term, 0) + c
    return BurnsideElement(Y.source, X.target, out, mod)


def epsilon(X: BurnsideElement) -> int:
    """The augmentation: [P, phi] goes to |source : P|."""
    n = X.source.order
    total = sum(c * (n // g.order) for g, c in X.coeffs.items())
    return total % X.modulus if X.modulus else total


def opposite(X: BurnsideElement) -> BurnsideElement:
    """[P, phi] in A(G, H) goes to [phi(P), phi^-1] in A(H, G)."""
    out: dict[BisetGenerator, int] = {}
    for g, c in X.coeffs.items():
        inv = {v: u for u, v in zip(g.P, g.images)}
        gen = canonicalize(X.target, X.source, g.images, inv)
        out[gen] = out.get(gen, 0) + c
    return BurnsideElement(X.target, X.source, out, X.modulus)


def characteristic_biset(F: AmbientFusionSystem, modulus: int | None = None) -> BurnsideElement:
    """The ambient group G viewed as an (S, S)-biset, decomposed into generators.

    One term [S n gSg^-1, c_{g^-1}] per double coset SgS.
    """
    if not isinstance(F, AmbientFusionSystem):
        raise FusionError("the characteristic biset needs an ambient group")
    S = F.S
    G = S.group
    out: dict[BisetGenerator, int] = {}
    for g in double_coset_reps(S, F.G, S):
        P = intersection(S, conjugate_subgroup(S, g))
        gi = G.inv[g]
        gen = canonicalize(S, S, P.members, {u: G.conj(gi, u) for u in P.members})
        out[gen] = out.get(gen, 0) + 1
    return BurnsideElement(S, S, out, modulus)


def f_morphisms(F: FusionSystem) -> list[tuple[Subgroup, tuple[int, ...]]]:
    """All (P, phi) with phi in Hom_F(P, S), P over all subgroups of S."""
    return [(P, m) for P in F.subgroups for m in sorted(F.maps(P, F.S))]


def is_f_generated(F: FusionSystem, X: BurnsideElement) -> bool:
    """Whether X is a combination of [P, phi] with phi in Hom_F(P, S)."""
    S = F.S
    for g in X.coeffs:
        P = Subgroup(S.group, g.P)
        if g.images not in F.maps(P, S):
            return False
    return True


def _stability(F: FusionSystem, X: BurnsideElement, side: str) -> bool:
    S = F.S
    mod = X.modulus
    for P, m in f_morphisms(F):
        phi = dict(zip(P.elements, m))
        incl = {u: u for u in P.members}
        if side == "right":
            lhs = compose(X, morphism_biset(P, phi, S, mod))
            rhs = compose(X, morphism_biset(P, incl, S, mod))
        else:
            lhs = compose(inverse_morphism_biset(P, phi, S, mod), X)
            rhs = compose(inverse_morphism_biset(P, incl, S, mod), X)
        if lhs != rhs:
            return False
    return True


def is_right_stable(F: FusionSystem, X: BurnsideElement) -> bool:
    """X o [P, phi] = X o [P, incl] in A(P, target) for every F-morphism phi: P -> S."""
    if X.source != F.S:
        raise BurnsideError("right stability needs X with source S")
    return _stability(F, X, "right")


def is_left_stable(F: FusionSystem, X: BurnsideElement) -> bool:
    """[phi(P), phi^-1] o X = [P, id] o X for every F-morphism phi: P -> S."""
    if X.target != F.S:
        raise BurnsideError("left stability needs X with target S")
    return _stability(F, X, "left")


@dataclass(frozen=True)
class CharacteristicReport:
    f_generated: bool
    left_stable: bool
    right_stable: bool
    eps_unit: bool

    @property
    def ok(self) -> bool:
        return self.f_generated and self.left_stable and self.right_stable and self.eps_unit


def verify_characteristic(F: FusionSystem, X: BurnsideElement) -> CharacteristicReport:
    return CharacteristicReport(
        f_generated=is_f_generated(F, X),
        left_stable=is_left_stable(F, X),
        right_stable=is_right_stable(F, X),
        eps_unit=epsilon(X) % F.p != 0,
    )


def abelianization_exponent(H: Subgroup, p: int) -> int:
    """e with p^e the exponent of the p-part of H/H'."""
    Q = quotient_group(H, derived_subgroup(H)).group
    exp = 1
    for o in Q.orders:
        exp = max(exp, p_part(o, p))
    e = 0
    while exp > 1:
        exp //= p
        e += 1
    return e


def default_precision(F: FusionSystem, *others: Subgroup) -> int:
    """e + 2, with p^e the largest abelianization exponent among S and ``others``."""
    e = max(abelianization_exponent(H, F.p) for H in (F.S, *others))
    return e + 2


def _key(X: BurnsideElement) -> frozenset:
    return frozenset(X.coeffs.items())


def idempotent_from(seed: BurnsideElement, p: int, k: int) -> BurnsideElement:
    """The idempotent e in Z/p^k A(S, S) with e = seed^N for N large and divisible.

    Powers of the seed mod p are cycled until a repeat gives M with
    seed^(2M) = seed^M mod p; then seed^M mod p^k is raised to p-th powers
    until it stops changing, which happens within k steps.
    """
    if seed.source != seed.target:
        raise BurnsideError("idempotents need a square Burnside module")
    base = seed.reduce(p)
    seen: dict[frozenset, int] = {_key(base): 1}
    current = base
    M = None
    for j in range(2, POWER_CYCLE_CAP + 2):
        current = compose(current, base)
        key = _key(current)
        if key in seen:
            i = seen[key]
            period = j - i
            M = period * max(1, -(-i // period))
            break
        seen[key] = j
    if M is None:
        raise BurnsideError("powers of the seed did not cycle within the cap")
    modulus = p**k
    e = seed.reduce(modulus).power(M)
    for _ in range(k + 2):
        nxt = e.power(p)
        if nxt == e:
            return e
        e = nxt
    raise BurnsideError("p-power iteration did not stabilize")


def characteristic_idempotent(
    F: FusionSystem,
    k: int | None = None,
    seed: BurnsideElement | None = None,
) -> BurnsideElement:
    """The characteristic idempotent of F in Z/p^k A(S, S).

    The seed defaults to the characteristic biset of the ambient group; any
    characteristic element gives the same answer.
    """
    if F.S.order > IDEMPOTENT_ORDER_BOUND:
        raise BurnsideError(
            f"|S| = {F.S.order} exceeds the idempotent bound {IDEMPOTENT_ORDER_BOUND}"
        )
    if k is None:
        k = default_precision(F)
    if seed is None:
        seed = characteristic_biset(F)
    return idempotent_from(seed, F.p, k)


def seed_multiplier(p: int) -> int:
    """A small unit scalar c such that c times a characteristic element is again
    characteristic (c mod p must differ from 0, and c = 1 is trivial)."""
    return 4 if p == 3 else 3


@dataclass(frozen=True)
class CommutationReport:
    with_restriction: bool
    with_transfer: bool

    @property
    def ok(self) -> bool:
        return self.with_restriction and self.with_transfer


def check_idempotent_commutation(
    F: AmbientFusionSystem, N: Subgroup, k: int | None = None
) -> CommutationReport:
    """Compare omega_F and omega_{F_N} through restriction and transfer bisets.

    Checks  [N, incl] o omega_N = omega_F o [N, incl]  in A(N, S) and
            omega_N o [N, id]   = [N, id] o omega_F    in A(S, N).
    """
    if k is None:
        k = default_precision(F, N)
    FN = p_power_index_subsystem(F, N)
    wF = characteristic_idempotent(F, k)
    wN = characteristic_idempotent(FN, k)
    m = wF.modulus
    S = F.S
    res = restriction_biset(N, S, m)
    tr = transfer_biset(N, S, m)
    return CommutationReport(
        with_restriction=compose(res, wN) == compose(wF, res),
        with_transfer=compose(wN, tr) == compose(tr, wF),
    )


def check_conjugation_commutation(
    F: AmbientFusionSystem, N: Subgroup, k: int | None = None
) -> bool:
    """omega_{F_N} commutes with [N, c_x] for every x in S."""
    if k is None:
        k = default_precision(F, N)
    FN = p_power_index_subsystem(F, N)
    wN = characteristic_idempotent(FN, k)
    seen = set()
    for x in F.S.elements:
        c = conjugation_biset(N, x, wN.modulus)
        if _key(c) in seen:
            continue
        seen.add(_key(c))
        if compose(wN, c) != compose(c, wN):
            return False
    return True


@dataclass(frozen=True)
class StabilityCheck:
    absorbs: bool
    right_stable: bool

    @property
    def agree(self) -> bool:
        return self.absorbs == self.right_stable


def check_stability_characterization(
    F: FusionSystem, X: BurnsideElement, k: int | None = None, omega: BurnsideElement | None = None
) -> StabilityCheck:
    """Compare 'X o omega_F = X' with right F-stability of X (source S)."""
    if omega is None:
        omega = characteristic_idempotent(F, k)
    Xm = X.reduce(omega.modulus) if X.modulus is None else X
    return StabilityCheck(
        absorbs=compose(Xm, omega) == Xm,
        right_stable=is_right_stable(F, Xm),
    )


def random_generator(
    source: Subgroup, target: Subgroup, rng: random.Random
) -> BisetGenerator:
    """A random [P, phi] with P a subgroup of source and phi injective into target."""
    from .groups import all_subgroups, injective_homs

    while True:
        P = rng.choice(all_subgroups(source))
        homs = injective_homs(P, target)
        if homs:
            m = rng.choice(homs)
            return canonicalize(source, target, P.elements, dict(zip(P.elements, m)))


def random_element(
    source: Subgroup,
    target: Subgroup,
    rng: random.Random,
    terms: int = 2,
    coeff_range: int = 3,
    modulus: int | None = None,
) -> BurnsideElement:
    out: dict[BisetGenerator, int] = {}
    for _ in range(terms):
        g = random_generator(source, target, rng)
        out[g] = out.get(g, 0) + rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
    return BurnsideElement(source, target, out, modulus)


def format_element(X: BurnsideElement) -> str:
    """One line per generator: ``coeff * [gens of P ; images of the gens]``."""
    sg, tg = X.source.group, X.target.group
    lines = []
    for g, c in X.terms():
        P = Subgroup(sg, g.P)
        phi = g.as_dict()
        gens = P.generators
        lines.append(
            f"{c} * [{', '.join(sg.label(x) for x in gens)} ; "
            f"{', '.join(tg.label(phi[x]) for x in gens)}]"
        )
    return "\n".join(lines) if lines else "0"


def parse_element(
    text: str, source: Subgroup, target: Subgroup, modulus: int | None = None
) -> BurnsideElement:
    """Inverse of :func:`format_element`."""
    from .groups import generate_subgroup

    sg, tg = source.group, target.group
    out = BurnsideElement(source, target, {}, modulus)
    for raw in text.strip().splitlines():
        line = raw.strip()
        if not line or line == "0":
            continue
        try:
            coeff_text, rest = line.split("*", 1)
            coeff = int(coeff_text)
            body = rest.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ValueError
            left, right = body[1:-1].split(";")
        except ValueError:
            raise BurnsideError(f"malformed Burnside term: {raw!r}") from None
        gens = [sg.index(s.strip()) for s in left.split(",") if s.strip()]
        imgs = [tg.index(s.strip()) for s in right.split(",") if s.strip()]
        if len(gens) != len(imgs):
            raise BurnsideError(f"generator and image counts differ in {raw!r}")
        P = generate_subgroup(sg, gens)
        phi = _extend_hom(P, gens, imgs, tg)
        out = out + element(source, target, P, phi, coeff, modulus)
    return out


def _extend_hom(P: Subgroup, gens: list[int], imgs: list[int], tg) -> dict[int, int]:
    G = P.group
    f = {0: 0}
    queue = [0]
    for a in queue:
        for g, c in zip(gens, imgs):
            x, y = G.mul[a][g], tg.mul[f[a]][c]
            if x in f:
                if f[x] != y:
                    raise BurnsideError("generator images do not define a homomorphism")
            else:
                f[x] = y
                queue.append(x)
    return f
