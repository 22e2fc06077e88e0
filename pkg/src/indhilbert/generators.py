"""Graph families with fixed vertex labelings.

Labeling conventions (all deterministic):

* ``Path(n)``: vertices ``0..n-1`` in path order.
* ``Cycle(n)``: vertices ``0..n-1`` in cyclic order.
* ``Star(k)``: centre ``0``, leaves ``1..k``.
* ``StarTriangle(m)``: centre ``0``; triangle ``i`` is ``{0, 2i+1, 2i+2}``.
* ``CompleteMultipartite(parts)``: part ``i`` is a consecutive block, in the
  given order.
* ``MAryTree``: breadth-first order, root ``0``, children of a vertex are
  numbered consecutively.
* ``Antiregular(n, connected=True)``: ``A_1 = K_1``, ``A_2 = K_2`` and
  ``A_n = K_1 + (K_1 u A_{n-2})`` with the dominating vertex ``0``, the added
  isolated vertex ``1`` and ``A_{n-2}`` on ``2..n-1``.
  ``Antiregular(n, connected=False)`` is ``K_1 u A_{n-1}`` with the isolated
  vertex ``0`` and ``A_{n-1}`` on ``1..n-1``.
* ``CameronWalker``: base vertices ``U`` first (``0..|U|-1``), then ``V``,
  then the leaves of ``u_0, u_1, ...`` in order, then the triangle pairs of
  ``v_0, v_1, ...`` in order.  Leaves hang on ``U``, pendant triangles on ``V``.
* ``CompleteBipartiteMinus(m, n, removed)``: ``U = 0..m-1``, ``V = m..m+n-1``;
  a removed pair ``(i, j)`` names ``u_i`` and ``v_j`` by their part index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError, disjoint_union, zykov_sum


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        _require(self.n >= 1, "Path needs n >= 1")

    @property
    def key(self) -> str:
        return f"path:{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        _require(self.n >= 3, "Cycle needs n >= 3")

    @property
    def key(self) -> str:
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Star:
    leaves: int

    def __post_init__(self):
        _require(self.leaves >= 1, "Star needs at least one leaf")

    @property
    def key(self) -> str:
        return f"star:{self.leaves}"


@dataclass(frozen=True)
class StarTriangle:
    m: int

    def __post_init__(self):
        _require(self.m >= 1, "StarTriangle needs m >= 1")

    @property
    def key(self) -> str:
        return f"star-triangle:{self.m}"


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        _require(len(self.parts) >= 1, "need at least one part")
        _require(all(p >= 1 for p in self.parts), "part sizes must be >= 1")
        _require(
            list(self.parts) == sorted(self.parts, reverse=True),
            "part sizes must be non-increasing",
        )

    @property
    def key(self) -> str:
        return "multipartite:" + ",".join(map(str, self.parts))


@dataclass(frozen=True)
class MAryTree:
    m: int
    depth: int
    shape: str = "perfect"
    seed: int = 0

    def __post_init__(self):
        _require(self.m >= 1, "MAryTree needs m >= 1")
        _require(self.depth >= 0, "MAryTree needs depth >= 0")
        _require(self.shape in ("perfect", "random"), f"unknown shape {self.shape!r}")
        _require(0 <= self.seed < 2**64, "seed must fit in 64 bits")

    @property
    def key(self) -> str:
        if self.shape == "perfect":
            return f"mary-tree:{self.m},{self.depth}"
        return f"mary-tree:{self.m},{self.depth},random,{self.seed}"


@dataclass(frozen=True)
class Antiregular:
    n: int
    connected: bool = True

    def __post_init__(self):
        _require(self.n >= 1, "Antiregular needs n >= 1")
        _require(self.connected or self.n >= 2, "disconnected antiregular needs n >= 2")

    @property
    def key(self) -> str:
        return f"antiregular:{self.n}" + ("" if self.connected else ",disconnected")


@dataclass(frozen=True)
class CameronWalker:
    """Connected bipartite base on ``U x V`` with whiskers on ``U`` and triangles on ``V``.

    ``base_edges`` are ``(i, j)`` pairs meaning ``u_i v_j``.
    """

    u_count: int
    v_count: int
    base_edges: tuple[tuple[int, int], ...]
    leaves: tuple[int, ...]
    triangles: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base_edges", tuple(sorted({tuple(e) for e in self.base_edges})))
        object.__setattr__(self, "leaves", tuple(self.leaves))
        object.__setattr__(self, "triangles", tuple(self.triangles))
        _require(self.u_count >= 1 and self.v_count >= 1, "both sides must be nonempty")
        _require(len(self.leaves) == self.u_count, "one leaf count per U-vertex")
        _require(len(self.triangles) == self.v_count, "one triangle count per V-vertex")
        _require(all(c >= 1 for c in self.leaves), "every U-vertex needs at least one leaf")
        _require(all(c >= 0 for c in self.triangles), "triangle counts must be >= 0")
        for i, j in self.base_edges:
            _require(0 <= i < self.u_count and 0 <= j < self.v_count, f"bad base edge {(i, j)}")
        base = self.base_graph()
        _require(base.is_connected(), "bipartite base must be connected")

    def base_graph(self) -> Graph:
        return Graph.build(
            self.u_count + self.v_count,
            [(i, self.u_count + j) for i, j in self.base_edges],
        )

    @property
    def key(self) -> str:
        edges = ";".join(f"{i}-{j}" for i, j in self.base_edges)
        return (
            f"cameron-walker:{self.u_count},{self.v_count}:{edges}:"
            + ",".join(map(str, self.leaves))
            + ":"
            + ",".join(map(str, self.triangles))
        )


@dataclass(frozen=True)
class CompleteBipartiteMinus:
    m: int
    n: int
    removed: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "removed", tuple(tuple(e) for e in self.removed))
        _require(self.m >= 1 and self.n >= 1, "both sides must be nonempty")
        _require(len(set(self.removed)) == len(self.removed), "removed edges must be distinct")
        for i, j in self.removed:
            _require(0 <= i < self.m and 0 <= j < self.n, f"{(i, j)} is not an edge of K_{{m,n}}")

    @property
    def key(self) -> str:
        return f"bipartite-minus:{self.m},{self.n}:" + ";".join(f"{i}-{j}" for i, j in self.removed)


FamilySpec = (
    Path
    | Cycle
    | Star
    | StarTriangle
    | CompleteMultipartite
    | MAryTree
    | Antiregular
    | CameronWalker
    | CompleteBipartiteMinus
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_triangle(m: int) -> Graph:
    edges = []
    for i in range(m):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.build(2 * m + 1, edges)


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    return zykov_sum(*(Graph.edgeless(p) for p in parts))


def mary_tree(m: int, depth: int, shape: str = "perfect", seed: int = 0) -> Graph:
    rng = random.Random(seed)
    edges = []
    level = [0]
    count = 1
    for _ in range(depth):
        nxt = []
        for parent in level:
            k = m if shape == "perfect" else rng.randint(1, m)
            for _ in range(k):
                edges.append((parent, count))
                nxt.append(count)
                count += 1
        level = nxt
    return Graph.build(count, edges)


def antiregular(n: int, connected: bool = True) -> Graph:
    if not connected:
        return disjoint_union(Graph.edgeless(1), antiregular(n - 1))
    if n == 1:
        return Graph.edgeless(1)
    if n == 2:
        return complete_graph(2)
    return zykov_sum(Graph.edgeless(1), disjoint_union(Graph.edgeless(1), antiregular(n - 2)))


def cameron_walker(spec: CameronWalker) -> Graph:
    nu = spec.u_count
    edges = [(i, nu + j) for i, j in spec.base_edges]
    nxt = nu + spec.v_count
    for i, k in enumerate(spec.leaves):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    for j, k in enumerate(spec.triangles):
        v = nu + j
        for _ in range(k):
            edges += [(v, nxt), (v, nxt + 1), (nxt, nxt + 1)]
            nxt += 2
    return Graph.build(nxt, edges)


def complete_bipartite_minus(m: int, n: int, removed=()) -> Graph:
    gone = set(removed)
    edges = [(i, m + j) for i in range(m) for j in range(n) if (i, j) not in gone]
    return Graph.build(m + n, edges)


def generate(spec: FamilySpec) -> Graph:
    match spec:
        case Path(n):
            return path_graph(n)
        case Cycle(n):
            return cycle_graph(n)
        case Star(k):
            return star_graph(k)
        case StarTriangle(m):
            return star_triangle(m)
        case CompleteMultipartite(parts):
            return complete_multipartite(parts)
        case MAryTree(m, depth, shape, seed):
            return mary_tree(m, depth, shape, seed)
        case Antiregular(n, connected):
            return antiregular(n, connected)
        case CameronWalker():
            return cameron_walker(spec)
        case CompleteBipartiteMinus(m, n, removed):
            return complete_bipartite_minus(m, n, removed)
    raise TypeError(f"not a family spec: {spec!r}")


def random_bipartite_connected(rng: random.Random, a: int, b: int, extra: float) -> list[tuple[int, int]]:
    """Random connected bipartite edge set on ``a x b`` as ``(i, j)`` part-index pairs."""
    order = [("u", 0), ("v", 0)] + rng.sample(
        [("u", i) for i in range(1, a)] + [("v", j) for j in range(1, b)], a + b - 2
    )
    seen = {"u": [], "v": []}
    edges = set()
    for side, idx in order:
        other = "v" if side == "u" else "u"
        if seen[other]:
            mate = rng.choice(seen[other])
            edges.add((idx, mate) if side == "u" else (mate, idx))
        seen[side].append(idx)
    for i in range(a):
        for j in range(b):
            if rng.random() < extra:
                edges.add((i, j))
    return sorted(edges)


def random_cameron_walker(
    rng: random.Random, max_side: int = 8, max_attach: int = 3
) -> CameronWalker:
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    edges = random_bipartite_connected(rng, a, b, rng.uniform(0.0, 0.5))
    return CameronWalker(
        a,
        b,
        tuple(edges),
        tuple(rng.randint(1, max_attach) for _ in range(a)),
        tuple(rng.randint(0, max_attach) for _ in range(b)),
    )


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
