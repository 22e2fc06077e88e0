"""Write every connected graph on 1..6 vertices, one graph6 line each.

Uses networkx's graph atlas (all graphs up to 7 vertices, one per
isomorphism class) and our own encoder, so the committed file can be checked
against networkx's decoder in the tests.

    python scripts/make_corpus.py [OUT]
"""

from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx

from indhilbert.formats import encode_graph6
from indhilbert.graph import Graph

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src/indhilbert/data/connected_upto6.g6"


def main(out: Path) -> None:
    lines = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if not 1 <= n <= 6 or not nx.is_connected(h):
            continue
        g = Graph.build(n, [tuple(e) for e in h.edges()])
        lines.append(encode_graph6(g))
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUT)
