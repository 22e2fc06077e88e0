"""Run every verify suite and write one JSON table per suite.

    python scripts/family_sweep.py [--out results/] [--seed 0] [--jobs 1]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from indhilbert.reports import dumps
from indhilbert.verify import SUITES, Grid, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for suite in SUITES:
        t0 = time.perf_counter()
        result = run_suite(suite, Grid(seed=args.seed), jobs=args.jobs)
        (args.out / f"{suite}.json").write_text(dumps(result) + "\n")
        failed += result["failed"]
        print(f"{suite:16s} {result['passed']:4d}/{result['total']:<4d} {time.perf_counter() - t0:6.2f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
