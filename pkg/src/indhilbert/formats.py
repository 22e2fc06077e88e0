"""Edge-list and graph6 readers/writers.

Edge-list files hold one ``u v`` pair per line.  Labels are arbitrary tokens,
numbered in order of first appearance.  ``#`` starts a comment, blank lines
are skipped, and a line ``vertices: a b c`` declares vertices (useful for
isolated ones).

graph6 is the usual nauty encoding restricted to ``n < 63``: one size byte
``n + 63`` followed by the upper triangle ``(0,1), (0,2), (1,2), (0,3), ...``
packed six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, GraphError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"byte {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]

    def name(self, v: int) -> str:
        return self.labels[v]


def parse_edgelist(text: str) -> LabeledGraph:
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []

    def intern(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            for tok in line.split(":", 1)[1].split():
                intern(tok)
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {len(toks)} token(s)", line=lineno)
        a, b = toks
        if a == b:
            raise ParseError(f"self-loop on {a!r}", line=lineno)
        edges.append((intern(a), intern(b)))
    return LabeledGraph(Graph.build(len(labels), edges), tuple(labels))


def write_edgelist(lg: LabeledGraph | Graph, header: str = "") -> str:
    if isinstance(lg, Graph):
        lg = LabeledGraph(lg, tuple(str(v) for v in range(lg.n)))
    g = lg.graph
    out = [f"# {line}" for line in header.splitlines()]
    touched = {v for e in g.edges() for v in e}
    if len(touched) < g.n or g.n == 0:
        out.append("vertices: " + " ".join(lg.labels))
    out.extend(f"{lg.labels[u]} {lg.labels[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"


_G6_HEADER = b">>graph6<<"


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    s = data.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", column=0)
    for pos, byte in enumerate(s):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the printable range 63..126", column=pos)
    if s[0] == 126:
        raise ParseError("graphs with 63 or more vertices are not supported", column=0)
    n = s[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated: need {nbytes} data bytes, got {len(body)}", column=len(s))
    if len(body) > nbytes:
        raise ParseError(f"{len(body) - nbytes} trailing byte(s)", column=1 + nbytes)
    bits = []
    for byte in body:
        x = byte - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", column=len(s) - 1)
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.build(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise GraphError("graph6 encoder supports n < 63 only")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_lines(text: str) -> list[Graph]:
    """One graph per nonblank line; errors carry the line number."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return graphs


def load_graph(path: str | Path, fmt: str | None = None) -> LabeledGraph:
    """Read a graph file; ``fmt`` defaults from the suffix (``.g6`` is graph6)."""
    path = Path(path)
    if fmt is None:
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edgelist"
    if fmt == "graph6":
        g = parse_graph6(path.read_bytes())
        return LabeledGraph(g, tuple(str(v) for v in range(g.n)))
    if fmt == "edgelist":
        return parse_edgelist(path.read_text())
    raise ValueError(f"unknown format {fmt!r}")
