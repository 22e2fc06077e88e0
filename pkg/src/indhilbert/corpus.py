"""Seeded random graph pools shared by tests and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fixtures import small_connected_graphs
from .generators import random_graph
from .graph import Graph


@dataclass(frozen=True)
class RandomPool:
    count: int = 10_000
    n_min: int = 7
    n_max: int = 16
    p_min: float = 0.1
    p_max: float = 0.7
    seed: int = 20240611

    def graphs(self) -> list[Graph]:
        rng = random.Random(self.seed)
        out = []
        for _ in range(self.count):
            n = rng.randint(self.n_min, self.n_max)
            out.append(random_graph(rng, n, rng.uniform(self.p_min, self.p_max)))
        return out


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    """Rejection-sample a connected G(n, p); p is raised slowly on failure."""
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g
        p = min(1.0, p + 0.02)


def connected_pool(count: int, n_min: int, n_max: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_connected(rng, rng.randint(n_min, n_max), rng.uniform(0.05, 0.5))
        for _ in range(count)
    ]


def small_corpus() -> list[Graph]:
    return small_connected_graphs()
