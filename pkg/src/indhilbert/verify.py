"""Grid sweeps comparing family predictions with the general engine.

Each suite expands to a list of family specs.  Every instance is generated,
run through ``indpoly`` and ``degree_report``, and compared field by field
with its closed-form prediction.  Some suites add structural checks
(Cameron-Walker matching numbers, elimination agreement on trees).
"""

from __future__ import annotations

import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .elimination import deg_equals_alpha
from .engine import DEFAULT_BUDGET, indpoly
from .families import predict
from .generators import (
    Antiregular,
    CameronWalker,
    CompleteBipartiteMinus,
    CompleteMultipartite,
    Cycle,
    FamilySpec,
    MAryTree,
    Path,
    StarTriangle,
    generate,
    random_cameron_walker,
)
from .hilbert import degree_report
from .matching import INDUCED_MAX_EDGES, is_cameron_walker
from .poly import derivative

SUITES = (
    "paths",
    "cycles",
    "multipartite",
    "trees",
    "cameron-walker",
    "antiregular",
    "bipartite-minus",
)

MAX_TREE_VERTICES = 1100


@dataclass(frozen=True)
class Grid:
    """Range of the suite's main parameter plus the number of random extras."""

    lo: int | None = None
    hi: int | None = None
    random_count: int | None = None
    seed: int = 0


@dataclass
class InstanceResult:
    key: str
    passed: bool
    mismatches: list[str]
    observed: dict = field(default_factory=dict)
    predicted: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "passed": self.passed,
            "mismatches": list(self.mismatches),
            "observed": dict(self.observed),
            "predicted": dict(self.predicted),
        }


def natural_key(key: str) -> tuple:
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", key))


def _tree_size(m: int, depth: int) -> int:
    return depth + 1 if m == 1 else (m ** (depth + 1) - 1) // (m - 1)


def suite_specs(suite: str, grid: Grid = Grid()) -> list[FamilySpec]:
    rng = random.Random(grid.seed)

    def span(lo: int, hi: int) -> range:
        return range(grid.lo if grid.lo is not None else lo, (grid.hi if grid.hi is not None else hi) + 1)

    count = (lambda default: grid.random_count if grid.random_count is not None else default)
    if suite == "paths":
        return [Path(n) for n in span(1, 60)]
    if suite == "cycles":
        return [Cycle(n) for n in span(3, 60)]
    if suite == "antiregular":
        r = span(2, 20)
        return [Antiregular(n) for n in r] + [Antiregular(n, False) for n in r if n >= 3]
    if suite == "multipartite":
        # every non-increasing vector with q <= 4 parts, largest part in the range
        specs = []
        hi = span(1, 6)
        for q in range(1, 5):
            for combo in combinations_with_replacement(range(1, hi.stop), q):
                parts = tuple(sorted(combo, reverse=True))
                if parts[0] in hi:
                    specs.append(CompleteMultipartite(parts))
        return specs
    if suite == "trees":
        specs = [
            MAryTree(m, d)
            for m in (1, 2, 3)
            for d in span(0, 6)
            if _tree_size(m, d) <= MAX_TREE_VERTICES
        ]
        for _ in range(count(50)):
            m, d = rng.randint(2, 3), rng.randint(0, 6)
            specs.append(MAryTree(m, d, "random", rng.getrandbits(64)))
        return specs
    if suite == "cameron-walker":
        specs = [StarTriangle(m) for m in span(1, 10)]
        specs += [random_cameron_walker(rng) for _ in range(count(200))]
        return specs
    if suite == "bipartite-minus":
        specs = []
        sides = span(1, 7)
        for m in sides:
            for n in sides:
                specs.append(CompleteBipartiteMinus(m, n, ((0, 0),)))
                for k in range(2, min(m, n) + 1):
                    specs.append(CompleteBipartiteMinus(m, n, tuple((i, i) for i in range(k))))
        specs.append(SIX_CYCLE_FROM_K45)
        for _ in range(count(40)):
            m, n = rng.randint(2, 6), rng.randint(2, 6)
            edges = [(i, j) for i in range(m) for j in range(n)]
            specs.append(CompleteBipartiteMinus(m, n, tuple(rng.sample(edges, rng.randint(1, len(edges) // 2)))))
        return specs
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


# the 6-cycle u0 v1 u1 v2 u2 v3 u0 of K_{4,5}, removed in walk order; same graph
# as the bundled k45_minus_six_cycle fixture
SIX_CYCLE_FROM_K45 = CompleteBipartiteMinus(4, 5, ((0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (0, 3)))


def check_instance(spec: FamilySpec, budget: int = DEFAULT_BUDGET) -> InstanceResult:
    g = generate(spec)
    profile = indpoly(g, budget=budget)
    report = degree_report(profile)
    prediction = predict(spec)
    fd = derivative(profile.poly)(-1) if prediction.first_derivative is not None else None
    problems = prediction.mismatches(report, fd)
    observed = prediction.observed(report)
    if fd is not None:
        observed["first_derivative"] = fd

    if isinstance(spec, Path) and report.a_invariant not in (-1, 0):
        problems.append(f"a-invariant {report.a_invariant} outside {{-1, 0}}")
    if isinstance(spec, (CameronWalker, StarTriangle)) and g.edge_count <= INDUCED_MAX_EDGES:
        cw = is_cameron_walker(g)
        observed["cameron_walker"] = cw
        if not cw:
            problems.append("induced matching number differs from matching number")
    if isinstance(spec, (MAryTree, CameronWalker)):
        cert = deg_equals_alpha(g, budget=budget)
        observed["elimination"] = cert.answer
        if cert.answer != report.deg_equals_alpha:
            problems.append(f"elimination says {cert.answer}, direct degree says {report.deg_equals_alpha}")
    return InstanceResult(spec.key, not problems, problems, observed, prediction.populated())


def _check_star(args):
    spec, budget = args
    return check_instance(spec, budget)


def run_suite(
    suite: str, grid: Grid = Grid(), budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> dict:
    specs = suite_specs(suite, grid)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_star, [(s, budget) for s in specs], chunksize=4))
    else:
        results = [check_instance(s, budget) for s in specs]
    results.sort(key=lambda r: natural_key(r.key))
    failed = sum(not r.passed for r in results)
    return {
        "suite": suite,
        "seed": grid.seed,
        "total": len(results),
        "passed": len(results) - failed,
        "failed": failed,
        "all_pass": failed == 0,
        "instances": [r.to_json() for r in results],
    }
