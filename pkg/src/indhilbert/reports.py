"""JSON run reports.

Keys are emitted sorted so identical runs give byte-identical output; the
only platform-dependent field is ``timing_ms``.
"""

from __future__ import annotations

import json
from typing import Callable

from .elimination import DegreeCertificate, Decomposition, EliminationOutcome
from .families import FamilyPrediction
from .graph import Graph
from .hilbert import DegreeReport

TIMING_KEY = "timing_ms"


def graph_descriptor(g: Graph, **extra) -> dict:
    d = {"n": g.n, "edges": g.edge_count}
    d.update(extra)
    return d


def elimination_block(cert: DegreeCertificate, name: Callable[[int], str] = str) -> dict:
    """Serialize a certificate with vertex names supplied by ``name``."""
    out: EliminationOutcome = cert.outcome
    names = lambda vs: [name(v) for v in vs]  # noqa: E731
    trace = [
        {
            "step": st.step_index,
            "removed": names(st.removed),
            "leaves_before": names(st.leaves_before),
            "remaining": len(st.remaining),
        }
        for st in out.trace
    ]
    v = out.verdict
    if isinstance(v, Decomposition):
        verdict = {
            "type": "decomposition",
            "stars": [names(s) for s in v.stars],
            "cores": [names(c) for c in v.cores],
            "core_I_at_minus_one": list(cert.core_values),
        }
    else:
        verdict = {"type": "zero", "kind": v.kind, "witness": names(v.witness), "at_step": v.at_step}
    return {"answer": cert.answer, "trace": trace, "verdict": verdict}


def prediction_block(pred: FamilyPrediction, mismatches: list[str]) -> dict:
    return {"predicted": pred.to_json(), "mismatches": list(mismatches), "match": not mismatches}


def run_report(
    input_desc: dict,
    report: DegreeReport,
    method: str,
    elimination: dict | None = None,
    prediction: dict | None = None,
    timing_ms: float | None = None,
) -> dict:
    d = {"input": input_desc, "method": method}
    d.update(report.to_json())
    if elimination is not None:
        d["elimination"] = elimination
    if prediction is not None:
        d["prediction"] = prediction
    if timing_ms is not None:
        d[TIMING_KEY] = round(timing_ms, 3)
    return d


def strip_timing(obj):
    """Recursively drop timing fields, for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != TIMING_KEY}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
