"""Finite groups as dense Cayley tables, with the subgroup machinery the rest
of the package is built on.

Elements of a group of order n are the integers 0..n-1 and 0 is always the
identity.  Subgroups are frozensets of element indices tied to their parent
table.  Conjugation is c_g(x) = g x g^-1 everywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

MAX_ORDER = 400
# Largest subgroup whose full lattice may be enumerated (C_3 wr C_3 has order 81).
ENUMERATION_BOUND = 81


class GroupError(ValueError):
    """Raised for malformed tables, bad subgroup arguments and bound violations."""


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``mul[a][b]`` is the index of ``a*b``.  Index 0 must be the identity.
    """

    def __init__(
        self,
        mul: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
        validate: bool = True,
    ):
        n = len(mul)
        if n == 0:
            raise GroupError("empty multiplication table")
        if n > MAX_ORDER:
            raise GroupError(f"group order {n} exceeds the bound {MAX_ORDER}")
        self.mul: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mul)
        self.order = n
        self.identity = 0
        if labels is not None and len(labels) != n:
            raise GroupError("label list does not match the group order")
        self.labels = tuple(labels) if labels is not None else tuple(f"g{i}" for i in range(n))
        self.name = name
        if validate:
            self._validate()
        self.inv: tuple[int, ...] = tuple(row.index(0) for row in self.mul)

    def _validate(self) -> None:
        n = self.order
        full = set(range(n))
        for a, row in enumerate(self.mul):
            if len(row) != n or set(row) != full:
                raise GroupError(f"row {a} is not a permutation of the elements")
        for b in range(n):
            if {self.mul[a][b] for a in range(n)} != full:
                raise GroupError(f"column {b} is not a permutation of the elements")
        if any(self.mul[0][x] != x or self.mul[x][0] != x for x in range(n)):
            raise GroupError("element 0 is not the identity")
        m = self.mul
        if n <= 64:
            triples: Iterable[tuple[int, int, int]] = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(n)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(20000)]
        for a, b, c in triples:
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise GroupError(f"multiplication is not associative at {(a, b, c)}")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, range(self.order))

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, (0,))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GroupError(f"unknown element label {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        result = 0
        while k:
            if k & 1:
                result = self.mul[result][x]
            x = self.mul[x][x]
            k >>= 1
        return result

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = self.mul[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    def conj(self, g: int, x: int) -> int:
        """c_g(x) = g x g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    @cached_property
    def conj_table(self) -> tuple[tuple[int, ...], ...]:
        """conj_table[g][x] = c_g(x), built on first use."""
        m, inv = self.mul, self.inv
        return tuple(tuple(m[m[g][x]][inv[g]] for x in range(self.order)) for g in range(self.order))

    def commutator(self, a: int, b: int) -> int:
        """a^-1 b^-1 a b."""
        m, i = self.mul, self.inv
        return m[m[i[a]][i[b]]][m[a][b]]

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as a set of element indices.

    Construction does not check closure; use :func:`generate_subgroup` or
    :meth:`check` when the member set is not known to be a subgroup.
    """

    def __init__(self, group: FiniteGroup, members: Iterable[int]):
        self.group = group
        self.members = frozenset(members)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of {self.group!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.group is self.group
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.members))

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __lt__(self, other: Subgroup) -> bool:
        return self.members < other.members

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in element order."""
        gens: list[int] = []
        current = frozenset((0,))
        for x in self.elements:
            if x not in current:
                gens.append(x)
                current = _closure(self.group.mul, gens)
        return tuple(gens)

    def check(self) -> None:
        mul, inv = self.group.mul, self.group.inv
        if 0 not in self.members:
            raise GroupError("subgroup does not contain the identity")
        for a in self.members:
            if inv[a] not in self.members:
                raise GroupError("subgroup not closed under inverses")
            for b in self.members:
                if mul[a][b] not in self.members:
                    raise GroupError("subgroup not closed under multiplication")
        if self.group.order % self.order:
            raise GroupError("subgroup order does not divide the group order")

    def is_normal_in(self, other: Subgroup) -> bool:
        conj = self.group.conj
        return self <= other and all(
            conj(g, x) in self.members for g in other.generators for x in self.generators
        )

    @cached_property
    def is_abelian(self) -> bool:
        m = self.group.mul
        gens = self.generators
        return all(m[a][b] == m[b][a] for a in gens for b in gens)

    def index_in(self, other: Subgroup) -> int:
        return other.order // self.order


GroupLike = Union[FiniteGroup, Subgroup]


def as_subgroup(G: GroupLike) -> Subgroup:
    return G.whole if isinstance(G, FiniteGroup) else G


class GroupHom:
    """A homomorphism given by the images of every element of its domain.

    ``mapping[i]`` is the image of ``domain.elements[i]``.
    """

    def __init__(self, domain: Subgroup, codomain: Subgroup, mapping: Sequence[int]):
        if len(mapping) != domain.order:
            raise GroupError("mapping does not cover the domain")
        self.domain = domain
        self.codomain = codomain
        self.mapping = tuple(mapping)

    @classmethod
    def from_dict(cls, domain: Subgroup, codomain: Subgroup, images: dict[int, int]) -> GroupHom:
        return cls(domain, codomain, [images[x] for x in domain.elements])

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain.elements, self.mapping))

    def __call__(self, x: int) -> int:
        return self.as_dict[x]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupHom)
            and other.domain == self.domain
            and other.mapping == self.mapping
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.mapping))

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.order} -> {self.codomain.order})"

    def is_homomorphism(self) -> bool:
        dm, cm = self.domain.group.mul, self.codomain.group.mul
        f = self.as_dict
        return all(
            f[dm[x][y]] == cm[f[x]][f[y]] for x in self.domain.elements for y in self.domain.elements
        )

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def image(self) -> Subgroup:
        return Subgroup(self.codomain.group, self.mapping)

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain.group, (x for x, y in self.as_dict.items() if y == 0))


def _closure(mul, gens: Iterable[int]) -> frozenset[int]:
    gens = [g for g in set(gens) if g != 0]
    elems = [0]
    seen = {0}
    i = 0
    while i < len(elems):
        row = mul[elems[i]]
        i += 1
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                elems.append(y)
    return frozenset(seen)


def generate_subgroup(G: GroupLike, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``; the empty set gives the trivial group."""
    group = G if isinstance(G, FiniteGroup) else G.group
    return Subgroup(group, _closure(group.mul, gens))


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    return generate_subgroup(A.group, A.generators + B.generators)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return Subgroup(A.group, A.members & B.members)


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """c_g(H) = g H g^-1."""
    conj = H.group.conj
    return Subgroup(H.group, (conj(g, x) for x in H.members))


def normalizer(G: GroupLike, H: Subgroup) -> Subgroup:
    G = as_subgroup(G)
    conj = G.group.conj
    gens = H.generators
    return Subgroup(
        G.group, (g for g in G.elements if all(conj(g, x) in H.members for x in gens))
    )


def centralizer(G: GroupLike, H: Subgroup) -> Subgroup:
    G = as_subgroup(G)
    m = G.group.mul
    gens = H.generators
    return Subgroup(G.group, (g for g in G.elements if all(m[g][x] == m[x][g] for x in gens)))


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_divisors(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]


def p_group_prime(H: Subgroup) -> int | None:
    """The prime p with |H| a power of p, or None (also None for |H| = 1)."""
    primes = prime_divisors(H.order)
    return primes[0] if len(primes) == 1 else None


def is_p_group(H: Subgroup, p: int) -> bool:
    return p_part(H.order, p) == H.order


def sylow_subgroup(G: GroupLike, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one factor of p at a time inside normalizers.

    At each step the first element (in index order) of N_G(P) - P whose p-th
    power lies in P is adjoined; such an element exists by Cauchy's theorem
    applied to N_G(P)/P.
    """
    G = as_subgroup(G)
    target = p_part(G.order, p)
    P = G.group.trivial
    mul = G.group.mul
    while P.order < target:
        N = normalizer(G, P)
        for x in N.elements:
            if x not in P.members and G.group.power(x, p) in P.members:
                P = Subgroup(G.group, (mul[y][z] for y in P.members for z in _closure(mul, [x])))
                break
        else:  # pragma: no cover - impossible by Cauchy's theorem
            raise GroupError("Sylow growth stalled")
    return P


def commutator_subgroup(A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B] = <a^-1 b^-1 a b : a in A, b in B>."""
    if A.group is not B.group:
        raise GroupError("subgroups have different parent groups")
    comm = A.group.commutator
    return generate_subgroup(A.group, {comm(a, b) for a in A.members for b in B.members})


def commutator_with_maps(P: Subgroup, maps: Iterable[Sequence[int]]) -> Subgroup:
    """[P, M] = <u^-1 alpha(u) : u in P, alpha in M>.

    Each map is a tuple of images aligned with ``P.elements``.
    """
    mul, inv = P.group.mul, P.group.inv
    gens = set()
    for alpha in maps:
        for u, au in zip(P.elements, alpha):
            gens.add(mul[inv[u]][au])
    return generate_subgroup(P.group, gens)


def derived_subgroup(H: Subgroup) -> Subgroup:
    return commutator_subgroup(H, H)


def power_subgroup(H: Subgroup, p: int) -> Subgroup:
    """<x^p : x in H>."""
    power = H.group.power
    return generate_subgroup(H.group, {power(x, p) for x in H.members})


def frattini_subgroup(S: Subgroup) -> Subgroup:
    """Phi(S) = S^p [S, S] for a p-group S."""
    if S.order == 1:
        return S
    p = p_group_prime(S)
    if p is None:
        raise GroupError("Frattini subgroup is only computed for p-groups")
    return join(power_subgroup(S, p), derived_subgroup(S))


def lower_central_series(S: Subgroup) -> list[Subgroup]:
    series = [S]
    while True:
        nxt = commutator_subgroup(series[-1], S)
        if nxt == series[-1]:
            return series
        series.append(nxt)


@dataclass(frozen=True)
class CosetData:
    """Left transversal [S/P] with the bookkeeping x.t used by transfer sums."""

    S: Subgroup
    P: Subgroup
    transversal: tuple[int, ...]
    rep: dict  # element of S -> chosen representative of its coset xP

    def act(self, x: int, t: int) -> int:
        """x.t: the representative of the coset x t P."""
        return self.rep[self.S.group.mul[x][t]]

    def residue(self, x: int, t: int) -> int:
        """(x.t)^-1 x t, an element of P."""
        mul, inv = self.S.group.mul, self.S.group.inv
        return mul[inv[self.act(x, t)]][mul[x][t]]


def coset_data(S: Subgroup, P: Subgroup, rng: random.Random | None = None) -> CosetData:
    """Left cosets tP of P in S.

    Representatives are the least element of each coset unless ``rng`` is
    given, in which case a random element of each coset is used.
    """
    if not P <= S:
        raise GroupError("P is not contained in S")
    mul = S.group.mul
    rep: dict[int, int] = {}
    transversal = []
    for x in S.elements:
        if x in rep:
            continue
        coset = sorted(mul[x][u] for u in P.elements)
        r = rng.choice(coset) if rng is not None else x
        transversal.append(r)
        for y in coset:
            rep[y] = r
    return CosetData(S, P, tuple(transversal), rep)


def double_coset_reps(
    H: Subgroup, G: GroupLike, K: Subgroup, rng: random.Random | None = None
) -> list[int]:
    """One representative per double coset HgK of G.

    By default the least element of each double coset; with ``rng`` a random one.
    """
    G = as_subgroup(G)
    mul = G.group.mul
    seen: set[int] = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        hg = [mul[h][g] for h in H.members]
        block = {mul[y][k] for y in hg for k in K.members}
        seen |= block
        reps.append(rng.choice(sorted(block)) if rng is not None else g)
    return reps


@dataclass(frozen=True)
class Quotient:
    """G/N as a table group, with the projection and a lift of each coset."""

    group: FiniteGroup
    kernel: Subgroup
    projection: GroupHom
    lifts: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.projection(x)

    def preimage(self, H: Subgroup) -> Subgroup:
        proj = self.projection.as_dict
        return Subgroup(self.kernel.group, (x for x, y in proj.items() if y in H.members))

    def image(self, H: Subgroup) -> Subgroup:
        proj = self.projection.as_dict
        return Subgroup(self.group, (proj[x] for x in H.members))


def quotient_group(G: GroupLike, N: Subgroup) -> Quotient:
    G = as_subgroup(G)
    if not N.is_normal_in(G):
        raise GroupError("N is not a normal subgroup")
    group = G.group
    mul = group.mul
    proj: dict[int, int] = {}
    lifts: list[int] = []
    for x in G.elements:
        if x in proj:
            continue
        for n in N.members:
            proj[mul[x][n]] = len(lifts)
        lifts.append(x)
    m = len(lifts)
    table = [[proj[mul[lifts[i]][lifts[j]]] for j in range(m)] for i in range(m)]
    labels = [f"[{group.label(x)}]" for x in lifts]
    Q = FiniteGroup(table, labels=labels, name=f"quotient of order {m}", validate=False)
    projection = GroupHom.from_dict(G, Q.whole, proj)
    return Quotient(Q, N, projection, tuple(lifts))


def p_residual(G: GroupLike, p: int) -> Subgroup:
    """O^p(G): the subgroup generated by the elements of order prime to p."""
    G = as_subgroup(G)
    orders = G.group.orders
    return generate_subgroup(G.group, (x for x in G.elements if orders[x] % p))


def _check_bound(H: Subgroup) -> None:
    if H.order > ENUMERATION_BOUND:
        raise GroupError(
            f"subgroup enumeration is limited to order {ENUMERATION_BOUND}, got {H.order}"
        )


@lru_cache(maxsize=512)
def cyclic_subgroups(H: Subgroup) -> tuple[Subgroup, ...]:
    mul = H.group.mul
    found = {}
    for x in H.elements:
        C = Subgroup(H.group, _closure(mul, [x]))
        found.setdefault(C.members, C)
    return tuple(sorted(found.values(), key=lambda C: (C.order, C.elements)))


@lru_cache(maxsize=256)
def all_subgroups(H: Subgroup) -> tuple[Subgroup, ...]:
    """Every subgroup of H, by joining cyclic subgroups until nothing new appears."""
    _check_bound(H)
    cyclics = cyclic_subgroups(H)
    found = {C.members: C for C in cyclics}
    frontier = list(cyclics)
    while frontier:
        fresh = []
        for A in frontier:
            for C in cyclics:
                if C.members <= A.members:
                    continue
                J = join(A, C)
                if J.members not in found:
                    found[J.members] = J
                    fresh.append(J)
        frontier = fresh
    return tuple(sorted(found.values(), key=lambda K: (K.order, K.elements)))


def normal_subgroups(H: Subgroup) -> list[Subgroup]:
    return [K for K in all_subgroups(H) if K.is_normal_in(H)]


def overgroups(G: GroupLike, S: Subgroup) -> list[Subgroup]:
    """All subgroups of G containing S (no order bound: only groups above S are built)."""
    G = as_subgroup(G)
    cyclics = [C for C in cyclic_subgroups(G) if not C <= S]
    found = {S.members: S}
    frontier = [S]
    while frontier:
        fresh = []
        for A in frontier:
            for C in cyclics:
                if C.members <= A.members:
                    continue
                J = join(A, C)
                if J.members not in found:
                    found[J.members] = J
                    fresh.append(J)
        frontier = fresh
    return sorted(found.values(), key=lambda K: (K.order, K.elements))


def find_isomorphism(A: FiniteGroup, B: FiniteGroup) -> tuple[int, ...] | None:
    """An isomorphism A -> B as an image table, or None.

    Backtracks over images of a generating set of A, restricted to elements of
    matching order, and extends each choice along the Cayley graph.
    """
    if A.order != B.order or sorted(A.orders) != sorted(B.orders):
        return None
    gens = A.whole.generators
    by_order: dict[int, list[int]] = {}
    for y in B.elements:
        by_order.setdefault(B.orders[y], []).append(y)
    candidates = [by_order.get(A.orders[g], []) for g in gens]

    def extend(images: Sequence[int]) -> tuple[int, ...] | None:
        f = {0: 0}
        queue = [0]
        for a in queue:
            for g, c in zip(gens, images):
                x, y = A.mul[a][g], B.mul[f[a]][c]
                if x in f:
                    if f[x] != y:
                        return None
                else:
                    f[x] = y
                    queue.append(x)
        if len(set(f.values())) != A.order:
            return None
        return tuple(f[x] for x in range(A.order))

    def search(i: int, chosen: list[int]) -> tuple[int, ...] | None:
        if i == len(gens):
            return extend(chosen)
        for c in candidates[i]:
            chosen.append(c)
            found = search(i + 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    return search(0, [])


def is_isomorphism(A: FiniteGroup, B: FiniteGroup, f: Sequence[int]) -> bool:
    return len(set(f)) == A.order == B.order and all(
        f[A.mul[x][y]] == B.mul[f[x]][f[y]] for x in A.elements for y in A.elements
    )


def permutation_group(
    generators: Sequence[Sequence[int]], name: str | None = None
) -> FiniteGroup:
    """Cayley table of the group generated by 0-based permutations.

    Products act left to right: (x*y)(i) = y(x(i)).  Labels are cycle notation
    on 1-based points.
    """
    degree = len(generators[0]) if generators else 1
    identity = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    elems = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        for g in gens:
            y = tuple(g[x[k]] for k in range(degree))
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                if len(elems) > MAX_ORDER:
                    raise GroupError(f"generated group exceeds order {MAX_ORDER}")
    table = [[index[tuple(y[x[k]] for k in range(degree))] for y in elems] for x in elems]
    labels = [cycle_string(x) for x in elems]
    return FiniteGroup(table, labels=labels, name=name, validate=False)


def cycle_string(perm: Sequence[int]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


def wreath_group(p: int) -> FiniteGroup:
    """C_p wr C_p as a permutation group on p^2 points, order p^(p+1)."""
    n = p * p
    base = list(range(n))
    for i in range(p):
        base[i] = (i + 1) % p
    top = [(k + p) % n for k in range(n)]
    return permutation_group([base, top], name=f"C{p} wr C{p}")


@dataclass(frozen=True)
class WreathWitness:
    kernel: Subgroup
    quotient: Quotient
    isomorphism: tuple[int, ...]  # C_p wr C_p -> S/K as an image table


@lru_cache(maxsize=256)
def has_wreath_quotient(S: Subgroup, p: int) -> WreathWitness | None:
    """A normal K of S with S/K isomorphic to C_p wr C_p, or None."""
    if not is_p_group(S, p):
        raise GroupError("has_wreath_quotient expects a p-group")
    size = p ** (p + 1)
    if S.order % size:
        return None
    # C_p wr C_p is 2-generated, so S must have at least that many generators.
    if S.order // frattini_subgroup(S).order < p * p:
        return None
    target = wreath_group(p)
    for K in normal_subgroups(S):
        if S.order // K.order != size:
            continue
        Q = quotient_group(S, K)
        iso = find_isomorphism(target, Q.group)
        if iso is not None:
            if not is_isomorphism(target, Q.group, iso):  # pragma: no cover
                raise GroupError("isomorphism check failed")
            return WreathWitness(K, Q, iso)
    return None


@dataclass(frozen=True)
class StructureProfile:
    nilpotency_class: int
    exponent: int
    is_regular: bool
    is_metacyclic: bool
    is_abelian: bool


def is_regular(S: Subgroup, p: int) -> bool:
    """Brute-force regularity: (xy)^p (x^p y^p)^-1 lies in the p-th power
    subgroup of [H, H] for every pair, where H = <x, y>."""
    G = S.group
    mul, inv, power = G.mul, G.inv, G.power
    cache: dict[frozenset, frozenset] = {}
    for x in S.elements:
        for y in S.elements:
            H = generate_subgroup(G, (x, y))
            agemo = cache.get(H.members)
            if agemo is None:
                agemo = power_subgroup(derived_subgroup(H), p).members
                cache[H.members] = agemo
            lhs = power(mul[x][y], p)
            rhs = mul[power(x, p)][power(y, p)]
            if mul[lhs][inv[rhs]] not in agemo:
                return False
    return True


def is_metacyclic(S: Subgroup) -> bool:
    """Whether S has a cyclic normal subgroup with cyclic quotient."""
    G = S.group
    for N in cyclic_subgroups(S):
        if not N.is_normal_in(S):
            continue
        index = S.order // N.order
        for s in S.elements:
            k, y = 1, s
            while y not in N.members:
                y = G.mul[y][s]
                k += 1
            if k == index:
                return True
    return False


def structure_profile(S: Subgroup, p: int) -> StructureProfile:
    if not is_p_group(S, p):
        raise GroupError("structure_profile expects a p-group")
    orders = S.group.orders
    return StructureProfile(
        nilpotency_class=len(lower_central_series(S)) - 1,
        exponent=math.lcm(*(orders[x] for x in S.elements)),
        is_regular=is_regular(S, p),
        is_metacyclic=is_metacyclic(S),
        is_abelian=S.is_abelian,
    )


def injective_homs(P: Subgroup, Q: Subgroup) -> list[tuple[int, ...]]:
    """All injective homomorphisms P -> Q, as image tuples aligned with P.elements."""
    G = P.group
    gens = P.generators
    orders = G.orders
    out = []

    def extend(images):
        f = {0: 0}
        queue = [0]
        for a in queue:
            for g, c in zip(gens, images):
                x, y = G.mul[a][g], Q.group.mul[f[a]][c]
                if x in f:
                    if f[x] != y:
                        return None
                else:
                    f[x] = y
                    queue.append(x)
        m = tuple(f[x] for x in P.elements)
        return m if len(set(m)) == len(m) else None

    def search(i, chosen):
        if i == len(gens):
            m = extend(chosen)
            if m is not None:
                out.append(m)
            return
        for c in Q.elements:
            if Q.group.orders[c] == orders[gens[i]]:
                search(i + 1, chosen + [c])

    search(0, [])
    return out
