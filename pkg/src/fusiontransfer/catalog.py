"""Built-in groups and the text formats for group input.

Catalog names::

    cyclic:n  dihedral:2n  quaternion:8|16  semidihedral:16
    symmetric:n (n<=5)  alternating:n (n<=6)  wreath:p (p in 2,3)
    extraspecial:27+  extraspecial:27-  SL23  GL23  product:<a>x<b>

plus ``extraspecial:27+:2`` and ``extraspecial:27-:2``, the extraspecial
groups extended by an involutory automorphism (so that p = 3 has nontrivial
fusion on a nonabelian Sylow subgroup).

Group files use either ``perm <degree>; <gen>; <gen> ...`` with generators in
1-based cycle notation, or ``table <n>; <n*n indices>``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from pathlib import Path
from typing import Callable, Sequence

from .groups import FiniteGroup, GroupError, permutation_group


class ParseError(GroupError):
    pass


def metacyclic(n: int, m: int, r: int, s: int, name: str) -> FiniteGroup:
    """<a, b | a^n, b^m = a^s, b a b^-1 = a^r>, elements a^i b^j at index j*n + i."""
    if pow(r, m, n) != 1 % n or (r * s - s) % n:
        raise GroupError("inconsistent metacyclic parameters")
    rpow = [pow(r, j, n) for j in range(m)]

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        a = i + rpow[j] * k
        b = j + l
        if b >= m:
            a += s
            b -= m
        return (b * n) + a % n

    size = n * m
    table = [[mul(x, y) for y in range(size)] for x in range(size)]

    def word(x: int) -> str:
        i, j = x % n, x // n
        parts = []
        if i:
            parts.append("a" if i == 1 else f"a^{i}")
        if j:
            parts.append("b" if j == 1 else f"b^{j}")
        return "".join(parts) or "1"

    return FiniteGroup(table, labels=[word(x) for x in range(size)], name=name, validate=False)


def cyclic(n: int) -> FiniteGroup:
    return metacyclic(n, 1, 1, 0, f"cyclic:{n}")


def dihedral(order: int) -> FiniteGroup:
    if order % 2 or order < 2:
        raise GroupError("dihedral groups have even order")
    n = order // 2
    return metacyclic(n, 2, -1 % n if n > 1 else 0, 0, f"dihedral:{order}")


def quaternion(order: int) -> FiniteGroup:
    if order not in (8, 16):
        raise GroupError("quaternion:8 or quaternion:16")
    n = order // 2
    return metacyclic(n, 2, n - 1, n // 2, f"quaternion:{order}")


def semidihedral(order: int) -> FiniteGroup:
    if order != 16:
        raise GroupError("only semidihedral:16 is built in")
    return metacyclic(8, 2, 3, 0, "semidihedral:16")


def _cycle(degree: int, points: Sequence[int]) -> list[int]:
    perm = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        perm[a] = b
    return perm


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric:n is built in for n <= 5")
    if n == 1:
        return permutation_group([[0]], name="symmetric:1")
    gens = [_cycle(n, list(range(n))), _cycle(n, [0, 1])]
    return permutation_group(gens, name=f"symmetric:{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("alternating:n is built in for n <= 6")
    if n < 3:
        return permutation_group([list(range(max(n, 1)))], name=f"alternating:{n}")
    gens = [_cycle(n, [0, 1, k]) for k in range(2, n)]
    return permutation_group(gens, name=f"alternating:{n}")


def wreath(p: int) -> FiniteGroup:
    from .groups import wreath_group

    if p not in (2, 3):
        raise GroupError("wreath:p is built in for p in {2, 3}")
    G = wreath_group(p)
    G.name = f"wreath:{p}"
    return G


def heisenberg(p: int = 3) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p, as triples (a, b, c)."""
    elems = list(itertools.product(range(p), repeat=3))
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    labels = [f"({a},{b},{c})" for a, b, c in elems]
    return FiniteGroup(table, labels=labels, name=f"extraspecial:{p**3}+", validate=False)


def extraspecial(kind: str) -> FiniteGroup:
    if kind == "27+":
        return heisenberg(3)
    if kind == "27-":
        G = metacyclic(9, 3, 4, 0, "extraspecial:27-")
        return G
    raise GroupError("extraspecial:27+ or extraspecial:27-")


def semidirect_cyclic(G: FiniteGroup, alpha: Sequence[int], m: int, name: str) -> FiniteGroup:
    """G x| <t> with t of order m acting as the automorphism ``alpha`` (an image table)."""
    n = G.order
    powers = [tuple(range(n))]
    for _ in range(1, m):
        prev = powers[-1]
        powers.append(tuple(alpha[prev[x]] for x in range(n)))
    if tuple(alpha[powers[-1][x]] for x in range(n)) != tuple(range(n)):
        raise GroupError("automorphism order does not divide m")
    if any(alpha[G.mul[x][y]] != G.mul[alpha[x]][alpha[y]] for x in range(n) for y in range(n)):
        raise GroupError("map is not an automorphism")

    def mul(u: int, v: int) -> int:
        g, j = u % n, u // n
        h, l = v % n, v // n
        return ((j + l) % m) * n + G.mul[g][powers[j][h]]

    size = n * m
    table = [[mul(u, v) for v in range(size)] for u in range(size)]
    labels = []
    for u in range(size):
        g, j = u % n, u // n
        labels.append(G.labels[g] if j == 0 else f"{G.labels[g]}*t" + (f"^{j}" if j > 1 else ""))
    return FiniteGroup(table, labels=labels, name=name, validate=False)


def _inversion_automorphism(G: FiniteGroup, images: dict[int, int]) -> list[int]:
    """Extend generator images to an automorphism table by walking the Cayley graph."""
    gens = list(images)
    f = {0: 0}
    queue = [0]
    for a in queue:
        for g in gens:
            x, y = G.mul[a][g], G.mul[f[a]][images[g]]
            if x not in f:
                f[x] = y
                queue.append(x)
    return [f[x] for x in range(G.order)]


def extraspecial_extended(kind: str) -> FiniteGroup:
    G = extraspecial(kind)
    if kind == "27+":
        x, y = G.index("(1,0,0)"), G.index("(0,1,0)")
    else:
        x, y = G.index("a"), G.index("b")
    alpha = _inversion_automorphism(G, {x: G.inv[x], y: G.inv[y]} if kind == "27+" else {x: G.inv[x], y: y})
    return semidirect_cyclic(G, alpha, 2, f"extraspecial:{kind}:2")


def matrix_group(gens: Sequence[tuple[int, int, int, int]], q: int, name: str) -> FiniteGroup:
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)

    identity = (1, 0, 0, 1)
    elems = [identity]
    index = {identity: 0}
    for x in elems:
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    labels = [f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in elems]
    return FiniteGroup(table, labels=labels, name=name, validate=False)


def sl23() -> FiniteGroup:
    return matrix_group([(1, 1, 0, 1), (1, 0, 1, 1)], 3, "SL23")


def gl23() -> FiniteGroup:
    return matrix_group([(1, 1, 0, 1), (1, 0, 1, 1), (2, 0, 0, 1)], 3, "GL23")


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None) -> FiniteGroup:
    nb = B.order
    size = A.order * nb
    table = [
        [A.mul[u // nb][v // nb] * nb + B.mul[u % nb][v % nb] for v in range(size)]
        for u in range(size)
    ]
    labels = [f"({A.labels[u // nb]}, {B.labels[u % nb]})" for u in range(size)]
    return FiniteGroup(table, labels=labels, name=name, validate=False)


_PRODUCT_SPLIT = re.compile(r"(?<=[0-9+\-])x(?=[A-Za-z])")

_CONSTRUCTORS: dict[str, Callable[[str], FiniteGroup]] = {
    "cyclic": lambda a: cyclic(int(a)),
    "dihedral": lambda a: dihedral(int(a)),
    "quaternion": lambda a: quaternion(int(a)),
    "semidihedral": lambda a: semidihedral(int(a)),
    "symmetric": lambda a: symmetric(int(a)),
    "alternating": lambda a: alternating(int(a)),
    "wreath": lambda a: wreath(int(a)),
}


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    """Build a group from its catalog name (cached, so repeated names share one table)."""
    name = name.strip()
    if name in ("SL23", "GL23"):
        return sl23() if name == "SL23" else gl23()
    head, _, arg = name.partition(":")
    try:
        if head == "product":
            parts = _PRODUCT_SPLIT.split(arg, maxsplit=1)
            if len(parts) != 2:
                raise ParseError(f"cannot split product {name!r}")
            G = direct_product(catalog_group(parts[0]), catalog_group(parts[1]), name=name)
        elif head == "extraspecial":
            kind, _, ext = arg.partition(":")
            G = extraspecial_extended(kind) if ext == "2" else extraspecial(kind)
            if ext not in ("", "2"):
                raise ParseError(f"unknown extraspecial variant {name!r}")
        elif head in _CONSTRUCTORS:
            G = _CONSTRUCTORS[head](arg)
        else:
            raise ParseError(f"unknown catalog name {name!r}")
    except ValueError as exc:
        if isinstance(exc, GroupError):
            raise
        raise ParseError(f"bad catalog argument in {name!r}") from exc
    G.name = name
    return G


# Default sweep used by the verification battery, in increasing order.
CATALOG = (
    "cyclic:2",
    "cyclic:4",
    "cyclic:6",
    "cyclic:8",
    "cyclic:9",
    "cyclic:12",
    "product:cyclic:2xcyclic:2",
    "product:cyclic:3xcyclic:3",
    "dihedral:6",
    "dihedral:8",
    "dihedral:10",
    "dihedral:12",
    "dihedral:16",
    "dihedral:18",
    "quaternion:8",
    "quaternion:16",
    "semidihedral:16",
    "symmetric:3",
    "symmetric:4",
    "alternating:4",
    "wreath:2",
    "SL23",
    "product:cyclic:3xsymmetric:3",
    "product:alternating:4xcyclic:2",
    "extraspecial:27+",
    "extraspecial:27-",
    "product:symmetric:3xsymmetric:3",
    "GL23",
    "product:cyclic:2xsymmetric:4",
    "extraspecial:27+:2",
    "extraspecial:27-:2",
    "alternating:5",
    "wreath:3",
    "symmetric:5",
    "alternating:6",
)


def catalog(max_order: int = 400) -> list[tuple[str, FiniteGroup]]:
    out = [(name, catalog_group(name)) for name in CATALOG]
    return [(name, G) for name, G in out if G.order <= max_order]


def parse_cycles(text: str, degree: int) -> list[int]:
    """A permutation from 1-based cycle notation such as ``(1 2 3)(4 5)``."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*[0-9][0-9,\s]*\)|\(\s*\))+", text):
        raise ParseError(f"malformed cycle notation {text!r}")
    perm = list(range(degree))
    for body in re.findall(r"\(([^)]*)\)", text):
        points = [int(tok) - 1 for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if not points:
            continue
        if len(set(points)) != len(points) or min(points) < 0 or max(points) >= degree:
            raise ParseError(f"bad cycle ({body}) for degree {degree}")
        cyc = _cycle(degree, points)
        # cycles in one word compose left to right
        perm = [cyc[perm[i]] for i in range(degree)]
    return perm


def parse_group_text(text: str, name: str | None = None) -> FiniteGroup:
    parts = [part.strip() for part in text.replace("\n", " ").split(";")]
    parts = [part for part in parts if part]
    if not parts:
        raise ParseError("empty group description")
    head = parts[0].split()
    if len(head) != 2 or not head[1].isdigit():
        raise ParseError(f"expected 'perm <degree>' or 'table <order>', got {parts[0]!r}")
    kind, size = head[0], int(head[1])
    if kind == "perm":
        if size < 1:
            raise ParseError("degree must be positive")
        gens = [parse_cycles(part, size) for part in parts[1:]] or [list(range(size))]
        return permutation_group(gens, name=name)
    if kind == "table":
        tokens = " ".join(parts[1:]).split()
        if len(tokens) != size * size:
            raise ParseError(f"table needs {size * size} entries, got {len(tokens)}")
        try:
            values = [int(tok) for tok in tokens]
        except ValueError as exc:
            raise ParseError("table entries must be integers") from exc
        if any(v < 0 or v >= size for v in values):
            raise ParseError("table entry out of range")
        rows = [values[i * size:(i + 1) * size] for i in range(size)]
        return _table_with_identity_first(rows, name)
    raise ParseError(f"unknown group format {kind!r}")


def _table_with_identity_first(rows: list[list[int]], name: str | None) -> FiniteGroup:
    n = len(rows)
    e = next((x for x in range(n) if rows[x] == list(range(n))), None)
    if e is None:
        raise ParseError("table has no identity element")
    if e != 0:
        # swap labels e and 0 so that the identity sits at index 0
        swap = list(range(n))
        swap[0], swap[e] = e, 0
        rows = [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
    return FiniteGroup(rows, name=name)


def parse_group(source: str) -> FiniteGroup:
    """A group from a catalog name, an inline description, or a file path."""
    source = source.strip()
    if source.startswith(("perm ", "table ")):
        return parse_group_text(source)
    path = Path(source)
    if path.is_file():
        return parse_group_text(path.read_text(), name=path.name)
    return catalog_group(source)


def serialize_group(G: FiniteGroup) -> str:
    rows = "\n".join(" ".join(str(v) for v in row) for row in G.mul)
    return f"table {G.order};\n{rows}\n"
