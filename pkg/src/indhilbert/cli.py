"""Command line: compute, decompose, family, verify.

Exit codes: 0 success, 1 a prediction or cross-check mismatch, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .elimination import deg_equals_alpha
from .engine import DEFAULT_BUDGET, EngineError, indpoly
from .families import predict
from .formats import LabeledGraph, ParseError, load_graph
from .generators import (
    Antiregular,
    CameronWalker,
    CompleteBipartiteMinus,
    CompleteMultipartite,
    Cycle,
    FamilySpec,
    MAryTree,
    Path,
    Star,
    StarTriangle,
    generate,
    random_cameron_walker,
)
from .graph import GraphError
from .hilbert import degree_report
from .poly import derivative, render
from .reports import dumps, elimination_block, graph_descriptor, prediction_block, run_report
from .verify import SUITES, Grid, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _pairs(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for tok in filter(None, text.split(";")):
        a, sep, b = tok.partition("-")
        if not sep:
            raise UsageError(f"expected i-j, got {tok!r}")
        out.append((int(a), int(b)))
    return tuple(out)


def parse_family(text: str, seed: int = 0) -> FamilySpec:
    """Parse ``name:args``; accepts every ``spec.key`` form and a few shorthands.

    ``mary-tree:m,d,random`` and ``cameron-walker:random`` draw from ``seed``.
    """
    name, _, rest = text.partition(":")
    try:
        match name:
            case "path":
                return Path(*_ints(rest))
            case "cycle":
                return Cycle(*_ints(rest))
            case "star":
                return Star(*_ints(rest))
            case "star-triangle":
                return StarTriangle(*_ints(rest))
            case "multipartite":
                return CompleteMultipartite(tuple(_ints(rest)))
            case "mary-tree":
                toks = rest.split(",")
                m, d = int(toks[0]), int(toks[1])
                if len(toks) == 2:
                    return MAryTree(m, d)
                if toks[2] != "random" or len(toks) > 4:
                    raise UsageError("mary-tree takes m,depth[,random[,seed]]")
                return MAryTree(m, d, "random", int(toks[3]) if len(toks) == 4 else seed)
            case "antiregular":
                toks = rest.split(",")
                if len(toks) == 2 and toks[1] != "disconnected":
                    raise UsageError("antiregular takes n[,disconnected]")
                return Antiregular(int(toks[0]), len(toks) == 1)
            case "cameron-walker":
                if rest == "random":
                    return random_cameron_walker(random.Random(seed))
                sides, edges, leaves, tris = rest.split(":")
                u, v = _ints(sides)
                return CameronWalker(u, v, _pairs(edges), tuple(_ints(leaves)), tuple(_ints(tris)))
            case "bipartite-minus":
                sides, _, edges = rest.partition(":")
                m, n = _ints(sides)
                return CompleteBipartiteMinus(m, n, _pairs(edges))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad family spec {text!r}: {exc}") from None
    raise UsageError(f"unknown family {name!r}")


def _load(args) -> LabeledGraph:
    if args.input is None:
        raise UsageError("--input is required")
    try:
        lg = load_graph(args.input, args.format)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.max_n is not None and lg.graph.n > args.max_n:
        raise UsageError(f"graph has {lg.graph.n} vertices, above --max-n {args.max_n}")
    return lg


def _compute(g, args):
    t0 = time.perf_counter()
    profile = indpoly(g, engine=args.engine, budget=args.budget)
    report = degree_report(profile)
    return profile, report, (time.perf_counter() - t0) * 1000


def _decompose(lg: LabeledGraph, budget: int) -> dict:
    """Eliminate on every component; deg h = alpha iff it holds on each."""
    g = lg.graph
    blocks = []
    for comp in g.connected_components():
        sub, labels = g.induced_subgraph(comp)
        cert = deg_equals_alpha(sub, budget=budget)
        block = elimination_block(cert, lambda v, labels=labels: lg.name(labels[v]))
        block["vertices"] = [lg.name(v) for v in labels]
        blocks.append(block)
    return {"answer": all(b["answer"] for b in blocks), "components": blocks}


def _table(report: dict) -> str:
    rows = [
        ("vertices", report["input"]["n"]),
        ("edges", report["input"]["edges"]),
        ("method", report["method"]),
        ("alpha", report["alpha"]),
        ("I(-1)", report["I_at_minus_one"]),
        ("k", report["k"]),
        ("deg h", report["deg_h"]),
        ("a-invariant", report["a_invariant"]),
        ("deg h = alpha", report["deg_h"] == report["alpha"]),
    ]
    if "elimination" in report:
        rows.append(("elimination", report["elimination"]["answer"]))
    if "prediction" in report:
        p = report["prediction"]
        rows.append(("prediction", "match" if p["match"] else "; ".join(p["mismatches"])))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _emit(args, report: dict, extra_lines=()) -> None:
    if args.json:
        print(dumps(report))
    else:
        print(_table(report))
        for line in extra_lines:
            print(line)


def cmd_compute(args) -> int:
    lg = _load(args)
    profile, report, ms = _compute(lg.graph, args)
    desc = graph_descriptor(lg.graph, source=str(args.input))
    out = run_report(desc, report, profile.method.value, timing_ms=ms)
    _emit(args, out, [f"I(G,t) = {render(profile.poly)}", f"h(t)   = {render(report.h_poly)}"])
    return EXIT_OK


def cmd_decompose(args) -> int:
    lg = _load(args)
    profile, report, ms = _compute(lg.graph, args)
    if lg.graph.n == 0:
        raise UsageError("decompose needs a nonempty graph")
    elim = _decompose(lg, args.budget)
    elim["agrees_with_direct"] = elim["answer"] == report.deg_equals_alpha
    desc = graph_descriptor(lg.graph, source=str(args.input))
    out = run_report(desc, report, profile.method.value, elimination=elim, timing_ms=ms)
    lines = []
    for b in elim["components"]:
        v = b["verdict"]
        if v["type"] == "zero":
            lines.append(f"component {b['vertices'][0]}...: zero ({v['kind']}: {' '.join(v['witness'])})")
        else:
            lines.append(
                f"component {b['vertices'][0]}...: {len(v['stars'])} star(s), cores I(-1) = {v['core_I_at_minus_one']}"
            )
    _emit(args, out, lines)
    return EXIT_OK if elim["agrees_with_direct"] else EXIT_MISMATCH


def cmd_family(args) -> int:
    spec = parse_family(args.spec, args.seed)
    g = generate(spec)
    if args.max_n is not None and g.n > args.max_n:
        raise UsageError(f"{spec.key} has {g.n} vertices, above --max-n {args.max_n}")
    profile, report, ms = _compute(g, args)
    pred = predict(spec)
    fd = derivative(profile.poly)(-1) if pred.first_derivative is not None else None
    mism = pred.mismatches(report, fd)
    desc = graph_descriptor(g, spec=spec.key)
    out = run_report(desc, report, profile.method.value, prediction=prediction_block(pred, mism), timing_ms=ms)
    _emit(args, out, [f"spec   = {spec.key}", f"I(G,t) = {render(profile.poly)}"])
    return EXIT_OK if not mism else EXIT_MISMATCH


def _grid(text: str | None) -> tuple[int | None, int | None]:
    if text is None:
        return None, None
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"--grid expects A..B, got {text!r}") from None


def cmd_verify(args) -> int:
    lo, hi = _grid(args.grid)
    grid = Grid(lo, hi, args.count, args.seed)
    try:
        result = run_suite(args.suite, grid, budget=args.budget, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(dumps(result))
    else:
        for inst in result["instances"]:
            status = "ok  " if inst["passed"] else "FAIL"
            print(f"{status} {inst['key']}" + ("" if inst["passed"] else "  " + "; ".join(inst["mismatches"])))
        print(f"{result['suite']}: {result['passed']}/{result['total']} passed")
    return EXIT_OK if result["all_pass"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--engine", choices=["auto", "brute", "recursive", "forest"], default="auto")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="recursion node budget")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=None, help="refuse graphs with more vertices")

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--input", help="graph file")
    io.add_argument("--format", choices=["edgelist", "graph6"], default=None, help="default: from suffix")

    p = argparse.ArgumentParser(prog="indhilbert", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compute", parents=[common, io], help="independence polynomial and deg h")
    c.set_defaults(func=cmd_compute)
    d = sub.add_parser("decompose", parents=[common, io], help="also run the leaf elimination")
    d.set_defaults(func=cmd_decompose)
    f = sub.add_parser("family", parents=[common], help="generate a family member and compare")
    f.add_argument("spec", help="e.g. path:4, multipartite:3,2, antiregular:5,disconnected")
    f.set_defaults(func=cmd_family)
    v = sub.add_parser("verify", parents=[common], help="sweep a family suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--grid", help="range A..B of the suite's main parameter")
    v.add_argument("--count", type=int, default=None, help="number of random instances")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, EngineError) as exc:
        print(f"indhilbert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
