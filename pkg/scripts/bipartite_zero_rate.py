"""How often does I(G, -1) vanish on random bipartite graphs of min degree >= 2?

Samples K_{m,n} minus random edge sets, keeps those with minimum degree at
least 2, and tabulates the share with I(G, -1) = 0, i.e. deg h < alpha.

    python scripts/bipartite_zero_rate.py [--samples 2000] [--seed 1]
"""

from __future__ import annotations

import argparse
import random
from collections import defaultdict

from indhilbert.engine import indpoly
from indhilbert.generators import complete_bipartite_minus


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-side", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally = defaultdict(lambda: [0, 0])
    kept = 0
    while kept < args.samples:
        m, n = rng.randint(2, args.max_side), rng.randint(2, args.max_side)
        edges = [(i, j) for i in range(m) for j in range(n)]
        # removing more than this many edges always leaves a vertex of degree < 2
        spare = max(0, len(edges) - 2 * max(m, n))
        removed = rng.sample(edges, rng.randint(0, spare))
        g = complete_bipartite_minus(m, n, removed)
        if g.min_degree() < 2:
            continue
        kept += 1
        zero = indpoly(g).i_at_minus_one == 0
        tally[m + n][0] += 1
        tally[m + n][1] += zero
    print("vertices  samples  I(-1)=0")
    for v in sorted(tally):
        total, zeros = tally[v]
        print(f"{v:8d}  {total:7d}  {zeros / total:7.3f}")


if __name__ == "__main__":
    main()
