"""Leaf-driven elimination deciding whether I(G, -1) vanishes.

Starting from a connected graph, repeatedly delete every vertex of degree at
least 2 that lies at distance exactly 2 from the leaf set.  Deleting such a
vertex ``u`` leaves ``I(-1)`` unchanged because ``G - N[u]`` isolates the leaf
behind it.  The process stops with

* a zero certificate: an isolated vertex, or two leaves at distance 3, both
  of which force ``I(-1) = 0``; or
* a decomposition into stars (``I(-1) = -1`` each) and cores of minimum
  degree at least 2, whose ``I(-1)`` values have to be evaluated.

Every vertex set reported here uses the labels of the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import DEFAULT_BUDGET, indpoly
from .graph import Graph, GraphError


@dataclass(frozen=True)
class EliminationStep:
    step_index: int
    removed: tuple[int, ...]
    leaves_before: tuple[int, ...]
    remaining: tuple[int, ...]
    snapshot: Graph  # vertex i of the snapshot is remaining[i]


@dataclass(frozen=True)
class ZeroCertificate:
    kind: str  # "isolated-vertex" | "distance3-leaf-pair"
    witness: tuple[int, ...]
    at_step: int


@dataclass(frozen=True)
class Decomposition:
    stars: tuple[tuple[int, ...], ...]
    cores: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EliminationOutcome:
    trace: tuple[EliminationStep, ...]
    verdict: ZeroCertificate | Decomposition

    @property
    def is_zero(self) -> bool:
        return isinstance(self.verdict, ZeroCertificate)


@dataclass(frozen=True)
class DegreeCertificate:
    answer: bool
    outcome: EliminationOutcome
    core_values: tuple[int, ...] = field(default=())


def u2_set(g: Graph) -> frozenset[int]:
    """Vertices of degree >= 2 whose distance to the nearest leaf is exactly 2."""
    leaves = g.leaves()
    if not leaves:
        return frozenset()
    dist = g.bfs_distances(leaves)
    return frozenset(v for v in range(g.n) if g.degree(v) >= 2 and dist[v] == 2)


def distance3_leaf_pair(g: Graph) -> tuple[int, int] | None:
    """Lexicographically first pair of leaves at distance exactly 3, if any.

    Leaves ``a`` and ``b`` are at distance 3 exactly when their unique
    neighbours are distinct and adjacent.
    """
    adj = g.adjacency
    best = None
    for a in sorted(g.leaves()):
        w = adj[a][0]
        for x in adj[w]:
            if x == a:
                continue
            for b in adj[x]:
                if b != w and len(adj[b]) == 1 and b > a:
                    if best is None or (a, b) < best:
                        best = (a, b)
        if best is not None:
            return best
    return None


def _zero_check(h: Graph, labels: tuple[int, ...], step: int) -> ZeroCertificate | None:
    iso = h.isolated_vertices()
    if iso:
        return ZeroCertificate("isolated-vertex", (labels[min(iso)],), step)
    pair = distance3_leaf_pair(h)
    if pair is not None:
        return ZeroCertificate("distance3-leaf-pair", tuple(labels[v] for v in pair), step)
    return None


def _finish(h: Graph, labels: tuple[int, ...]) -> Decomposition | None:
    """Classify components when each is a star or has min degree >= 2."""
    stars, cores = [], []
    for comp in h.connected_components():
        sub, sub_labels = h.induced_subgraph(comp)
        orig = tuple(labels[v] for v in sub_labels)
        if sub.is_star():
            stars.append(orig)
        elif sub.min_degree() >= 2:
            cores.append(orig)
        else:
            return None
    return Decomposition(tuple(stars), tuple(cores))


def eliminate(g: Graph, mode: str = "batch") -> EliminationOutcome:
    """Run the elimination process on a connected graph.

    ``mode="batch"`` removes the whole distance-2 set at once each round;
    ``mode="sequential"`` removes only its smallest vertex and recomputes.
    """
    if g.n == 0:
        raise GraphError("elimination needs a nonempty graph")
    if not g.is_connected():
        raise GraphError("elimination needs a connected graph")
    if mode not in ("batch", "sequential"):
        raise ValueError(f"unknown mode {mode!r}")
    h, labels = g, tuple(range(g.n))
    trace: list[EliminationStep] = []
    step = 0
    while True:
        cert = _zero_check(h, labels, step)
        if cert is not None:
            return EliminationOutcome(tuple(trace), cert)
        decomposition = _finish(h, labels)
        if decomposition is not None:
            return EliminationOutcome(tuple(trace), decomposition)
        u2 = u2_set(h)
        if not u2:
            raise AssertionError("no removable vertex but graph is not decomposed")
        drop = sorted(u2) if mode == "batch" else [min(u2)]
        nxt, keep = h.induced_delete(drop)
        remaining = tuple(labels[v] for v in keep)
        trace.append(
            EliminationStep(
                step_index=step,
                removed=tuple(labels[v] for v in drop),
                leaves_before=tuple(sorted(labels[v] for v in h.leaves())),
                remaining=remaining,
                snapshot=nxt,
            )
        )
        h, labels = nxt, remaining
        step += 1


def deg_equals_alpha(
    g: Graph, mode: str = "batch", budget: int = DEFAULT_BUDGET
) -> DegreeCertificate:
    """Decide ``deg h = alpha`` for connected ``g`` via elimination.

    Stars contribute -1 automatically, so only the cores are evaluated.
    """
    outcome = eliminate(g, mode)
    if outcome.is_zero:
        return DegreeCertificate(False, outcome)
    values = []
    for core in outcome.verdict.cores:
        sub, _ = g.induced_subgraph(core)
        values.append(indpoly(sub, budget=budget).i_at_minus_one)
    return DegreeCertificate(all(v != 0 for v in values), outcome, tuple(values))


def verify_certificate(g: Graph, outcome: EliminationOutcome) -> bool:
    """Re-check a verdict against the input graph using original labels only."""
    if outcome.is_zero:
        cert = outcome.verdict
        alive = set(range(g.n))
        for st in outcome.trace[: cert.at_step]:
            alive -= set(st.removed)
        h, labels = g.induced_subgraph(alive)
        index = {v: i for i, v in enumerate(labels)}
        w = [index[v] for v in cert.witness]
        if cert.kind == "isolated-vertex":
            return len(w) == 1 and h.degree(w[0]) == 0
        a, b = w
        return h.degree(a) == 1 and h.degree(b) == 1 and h.distance(a, b) == 3
    dec = outcome.verdict
    alive = set(range(g.n))
    for st in outcome.trace:
        alive -= set(st.removed)
    covered = [v for part in dec.stars + dec.cores for v in part]
    if sorted(covered) != sorted(alive):
        return False
    for star in dec.stars:
        if not g.induced_subgraph(star)[0].is_star():
            return False
    for core in dec.cores:
        sub = g.induced_subgraph(core)[0]
        if not sub.is_connected() or sub.min_degree() < 2:
            return False
    return True

