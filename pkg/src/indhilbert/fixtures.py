"""Bundled graphs: worked example edge lists and the small connected corpus."""

from __future__ import annotations

import re
from importlib import resources

from .formats import LabeledGraph, parse_edgelist, read_graph6_lines
from .graph import Graph

_EXPECT = re.compile(r"#\s*expect:\s*deg_h=(\d+)\s+alpha=(\d+)")


def _data():
    return resources.files("indhilbert") / "data"


def fixture_names() -> list[str]:
    return sorted(p.name[: -len(".edges")] for p in _data().iterdir() if p.name.endswith(".edges"))


def fixture_text(name: str) -> str:
    return (_data() / f"{name}.edges").read_text()


def load_fixture(name: str) -> LabeledGraph:
    return parse_edgelist(fixture_text(name))


def expected_pair(name: str) -> tuple[int, int] | None:
    """(deg_h, alpha) recorded in the fixture's ``# expect:`` comment."""
    m = _EXPECT.search(fixture_text(name))
    return (int(m.group(1)), int(m.group(2))) if m else None


def small_connected_graphs() -> list[Graph]:
    """All connected graphs on 1..6 vertices up to isomorphism (143 graphs)."""
    return read_graph6_lines((_data() / "connected_upto6.g6").read_text())
