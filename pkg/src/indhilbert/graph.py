"""Immutable simple graphs on dense vertex indices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

INF = float("inf")


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph; adjacency is a tuple of sorted neighbour tuples.

    Instances are never mutated.  Every operation that changes the vertex set
    returns a new graph together with the map from new to old labels.
    """

    __slots__ = ("n", "adjacency", "edge_count", "_masks")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(set(a))) for a in adjacency)
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for {n} vertices")
        total = 0
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += len(nbrs)
        self.n = n
        self.adjacency = adj
        self.edge_count = total // 2
        self._masks: tuple[int, ...] | None = None

    # construction ---------------------------------------------------------

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls(n, [()] * n)

    # basic queries ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.masks[u] >> v & 1)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set iff ``u`` adjacent)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in a) for a in self.adjacency)
        return self._masks

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} not in 0..{self.n - 1}")

    # neighbourhoods ---------------------------------------------------------

    def open_neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self.adjacency[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.open_neighborhood(v) | {v}

    def leaves(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if len(self.adjacency[v]) == 1)

    def isolated_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.adjacency[v])

    def min_degree(self) -> int | None:
        return min(self.degrees()) if self.n else None

    # distances and components ---------------------------------------------

    def bfs_distances(self, sources: Iterable[int]) -> list[float]:
        """Multi-source BFS; unreachable vertices get ``INF``."""
        dist: list[float] = [INF] * self.n
        queue: deque[int] = deque()
        for s in sources:
            self._check(s)
            if dist[s]:
                dist[s] = 0
                queue.append(s)
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] == INF:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def distance(self, u: int, v: int) -> float:
        self._check(v)
        return self.bfs_distances([u])[v]

    def connected_components(self) -> list[frozenset[int]]:
        """Components ordered by their smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.connected_components())

    def is_star(self) -> bool:
        """True for K_{1,k}, k >= 1 (K_2 included, K_1 excluded)."""
        if self.n < 2 or self.edge_count != self.n - 1:
            return False
        return any(len(a) == self.n - 1 for a in self.adjacency)

    # derived graphs ----------------------------------------------------------

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``keep``; returns it and the new->old label map."""
        labels = tuple(sorted(set(keep)))
        for v in labels:
            self._check(v)
        index = {v: i for i, v in enumerate(labels)}
        adj = [[index[u] for u in self.adjacency[v] if u in index] for v in labels]
        return Graph(len(labels), adj), labels

    def induced_delete(self, remove: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """``G - W``: delete the vertices of ``W`` with their edges."""
        gone = set(remove)
        for v in gone:
            self._check(v)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is not present")
        adj = [list(a) for a in self.adjacency]
        adj[u].remove(v)
        adj[v].remove(u)
        return Graph(self.n, adj)

    def complement(self) -> Graph:
        full = set(range(self.n))
        return Graph(self.n, [full - set(a) - {v} for v, a in enumerate(self.adjacency)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Side-by-side union; vertices of later graphs are shifted past earlier ones."""
    adj: list[list[int]] = []
    offset = 0
    for g in graphs:
        adj.extend([u + offset for u in a] for a in g.adjacency)
        offset += g.n
    return Graph(offset, adj)


def zykov_sum(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between distinct summands."""
    union = disjoint_union(*graphs)
    adj = [set(a) for a in union.adjacency]
    blocks = []
    offset = 0
    for g in graphs:
        blocks.append(range(offset, offset + g.n))
        offset += g.n
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1 :]:
            for u in bi:
                for v in bj:
                    adj[u].add(v)
                    adj[v].add(u)
    return Graph(union.n, adj)
