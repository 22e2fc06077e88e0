"""Independence polynomials I(G, t) by enumeration, recursion and tree DP.

All three routes work on bitmasks over the vertices of the input graph, so an
induced subgraph is identified by the set of original vertices it keeps.  The
recursive engine memoizes on exactly that set; no isomorphism testing is done.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph
from .poly import IntPolynomial, TaylorAtMinusOne, add_lists, mul_lists, taylor_at_minus_one

DEFAULT_BRUTE_CAP = 28
DEFAULT_BUDGET = 2**22


class Method(str, Enum):
    BRUTE_FORCE = "BruteForce"
    RECURSIVE = "Recursive"
    FOREST_DP = "ForestDP"
    COMPOSED = "Composed"


class EngineError(RuntimeError):
    pass


class CapExceeded(EngineError):
    pass


class BudgetExceeded(EngineError):
    pass


class NotAForest(EngineError):
    pass


@dataclass(frozen=True)
class IndependenceProfile:
    poly: IntPolynomial
    method: Method

    @property
    def s(self) -> tuple[int, ...]:
        return self.poly.coeffs

    @property
    def alpha(self) -> int:
        return self.poly.degree

    @property
    def taylor(self) -> TaylorAtMinusOne:
        # cached lazily: frozen dataclass, so go through __dict__
        cached = self.__dict__.get("_taylor")
        if cached is None:
            cached = taylor_at_minus_one(self.poly)
            object.__setattr__(self, "_taylor", cached)
        return cached

    @property
    def i_at_minus_one(self) -> int:
        return self.taylor[0]


def _lowbits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- brute force --------------------------------------------------------------


def indpoly_bruteforce(g: Graph, cap: int = DEFAULT_BRUTE_CAP) -> IndependenceProfile:
    """Count independent sets by size through exhaustive backtracking.

    Sets are generated as increasing vertex sequences: the next vertex is
    always taken from the undecided candidates above the last chosen one, and
    choosing ``v`` prunes ``N[v]`` from the candidates.
    """
    if g.n > cap:
        raise CapExceeded(f"brute force limited to {cap} vertices, graph has {g.n}")
    nbr = g.masks
    counts = [0] * (g.n + 1)

    def extend(cand: int, size: int) -> None:
        counts[size] += 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(cand & ~nbr[v], size + 1)

    extend((1 << g.n) - 1, 0)
    return IndependenceProfile(IntPolynomial(counts), Method.BRUTE_FORCE)


# -- forest DP ---------------------------------------------------------------


def _tree_poly(nbr: tuple[int, ...], mask: int) -> list[int]:
    """I(T, t) of the tree induced on ``mask`` (assumed connected and acyclic).

    Each vertex carries the pair (root excluded, root included) for its
    subtree; children are folded in by polynomial multiplication.
    """
    root = (mask & -mask).bit_length() - 1
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in _lowbits(nbr[x] & mask):
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    ex_of: dict[int, list[int]] = {}
    in_of: dict[int, list[int]] = {}
    for v in reversed(order):
        ex = [1]
        inc = [0, 1]
        for c in _lowbits(nbr[v] & mask):
            if parent[c] != v:
                continue
            ce, ci = ex_of.pop(c), in_of.pop(c)
            ex = mul_lists(ex, add_lists(ce, ci))
            inc = mul_lists(inc, ce)
        ex_of[v] = ex
        in_of[v] = inc
    return add_lists(ex_of[root], in_of[root])


def indpoly_forest(g: Graph) -> IndependenceProfile:
    """Two-state tree DP, multiplied over the trees of a forest."""
    if not g.is_forest():
        raise NotAForest("graph contains a cycle; use the recursive engine")
    nbr = g.masks
    acc = [1]
    for comp in g.connected_components():
        mask = sum(1 << v for v in comp)
        acc = mul_lists(acc, _tree_poly(nbr, mask))
    return IndependenceProfile(IntPolynomial(acc), Method.FOREST_DP)


# -- recursive engine -------------------------------------------------------------


def _components(nbr: tuple[int, ...], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for v in _lowbits(frontier):
                grow |= nbr[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


class _Recursion:
    def __init__(self, g: Graph, budget: int):
        self.nbr = g.masks
        self.budget = budget
        self.nodes = 0
        self.memo: dict[int, list[int]] = {0: [1]}

    def poly(self, mask: int) -> list[int]:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"recursion exceeded {self.budget} nodes")
        comps = _components(self.nbr, mask)
        if len(comps) > 1:
            out = [1]
            for c in comps:
                out = mul_lists(out, self.poly(c))
        else:
            out = self._connected(mask)
        self.memo[mask] = out
        return out

    def _connected(self, mask: int) -> list[int]:
        nbr = self.nbr
        size = bin(mask).count("1")
        best, best_deg, twice_edges = -1, -1, 0
        for v in _lowbits(mask):
            d = bin(nbr[v] & mask).count("1")
            twice_edges += d
            if d > best_deg:
                best, best_deg = v, d
        if twice_edges // 2 == size - 1:
            return _tree_poly(nbr, mask)
        without = self.poly(mask & ~(1 << best))
        closed = nbr[best] | (1 << best)
        with_v = self.poly(mask & ~closed)
        return add_lists(without, [0] + with_v)


def indpoly_recursive(g: Graph, budget: int = DEFAULT_BUDGET) -> IndependenceProfile:
    """Vertex-deletion recursion with component splitting and tree leaves.

    Connected pieces that are trees go to the tree DP; otherwise the pivot is
    a vertex of maximum degree (lowest index on ties) and
    ``I(H) = I(H - v) + t I(H - N[v])``.
    """
    rec = _Recursion(g, budget)
    return IndependenceProfile(IntPolynomial(rec.poly((1 << g.n) - 1)), Method.RECURSIVE)


def indpoly(
    g: Graph,
    engine: str = "auto",
    budget: int = DEFAULT_BUDGET,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> IndependenceProfile:
    """Dispatch: forests to the tree DP, everything else to the recursion."""
    if engine == "auto":
        engine = "forest" if g.is_forest() else "recursive"
    if engine == "forest":
        return indpoly_forest(g)
    if engine == "recursive":
        return indpoly_recursive(g, budget)
    if engine == "brute":
        return indpoly_bruteforce(g, brute_cap)
    raise ValueError(f"unknown engine {engine!r}")


def zykov_indpoly(profiles) -> IndependenceProfile:
    """I of a Zykov sum: the summands' polynomials added, minus ``k - 1``."""
    profiles = list(profiles)
    if not profiles:
        raise ValueError("need at least one summand")
    acc: list[int] = []
    for p in profiles:
        acc = add_lists(acc, p.poly.coeffs)
    acc = add_lists(acc, [-(len(profiles) - 1)])
    return IndependenceProfile(IntPolynomial(acc), Method.COMPOSED)
