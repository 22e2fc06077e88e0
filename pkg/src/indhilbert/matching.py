"""Matching number (Edmonds' blossom search) and induced matching number."""

from __future__ import annotations

from collections import deque

from .graph import Graph

INDUCED_MAX_EDGES = 24


class GuardExceeded(ValueError):
    pass


class _Blossom:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.match = [-1] * g.n

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.match[a] == -1:
                break
            a = self.parent[self.match[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.match[b]]

    def _mark(self, v: int, b: int, child: int) -> None:
        while self.base[v] != b:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.match[v]]] = True
            self.parent[v] = child
            child = self.match[v]
            v = self.parent[self.match[v]]

    def _augmenting_end(self, root: int) -> int:
        n = self.n
        self.used = [False] * n
        self.parent = [-1] * n
        self.base = list(range(n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.g.adjacency[v]:
                if self.base[v] == self.base[to] or self.match[v] == to:
                    continue
                if to == root or (self.match[to] != -1 and self.parent[self.match[to]] != -1):
                    cur = self._lca(v, to)
                    self.in_blossom = [False] * n
                    self._mark(v, cur, to)
                    self._mark(to, cur, v)
                    for i in range(n):
                        if self.in_blossom[self.base[i]]:
                            self.base[i] = cur
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.match[to] == -1:
                        return to
                    self.used[self.match[to]] = True
                    queue.append(self.match[to])
        return -1

    def solve(self) -> list[int]:
        for root in range(self.n):
            if self.match[root] != -1:
                continue
            v = self._augmenting_end(root)
            while v != -1:
                pv = self.parent[v]
                nxt = self.match[pv]
                self.match[v] = pv
                self.match[pv] = v
                v = nxt
        return self.match


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    mate = _Blossom(g).solve()
    return [(v, mate[v]) for v in range(g.n) if mate[v] > v]


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def induced_matching_number(g: Graph, max_edges: int = INDUCED_MAX_EDGES) -> int:
    """Largest set of edges no two of which share or are joined by an edge.

    Exhaustive over edge subsets with a remaining-edges bound.
    """
    edges = g.edges()
    if len(edges) > max_edges:
        raise GuardExceeded(f"induced matching search limited to {max_edges} edges")
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    reach = [closed[a] | closed[b] for a, b in edges]
    ends = [(1 << a) | (1 << b) for a, b in edges]
    best = 0

    def search(i: int, blocked: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            if size + (len(edges) - j) <= best:
                return
            if not ends[j] & blocked:
                search(j + 1, blocked | reach[j], size + 1)

    search(0, 0, 0)
    return best


def is_cameron_walker(g: Graph, max_edges: int = INDUCED_MAX_EDGES) -> bool:
    return induced_matching_number(g, max_edges) == matching_number(g)
