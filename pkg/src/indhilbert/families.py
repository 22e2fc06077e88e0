"""Closed-form predictions of I(G, -1) and deg h for the supported families.

Predictions are plain data.  Nothing in the engine reads them; a harness runs
the general engine on ``generate(spec)`` and compares afterwards.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, fields

from .engine import DEFAULT_BUDGET, indpoly
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
    complete_bipartite_minus,
    generate,
)
from .graph import Graph
from .hilbert import DegreeReport
from .matching import matching_number, induced_matching_number


@dataclass(frozen=True)
class FamilyPrediction:
    spec: FamilySpec
    alpha: int | None = None
    deg_h: int | None = None
    deg_equals_alpha: bool | None = None
    i_at_minus_one: int | None = None
    first_derivative: int | None = None  # I'(G, -1)
    k: int | None = None
    a_invariant: int | None = None
    notes: str = ""

    def observed(self, report: DegreeReport) -> dict[str, int | bool]:
        return {
            "alpha": report.alpha,
            "deg_h": report.deg_h,
            "deg_equals_alpha": report.deg_h == report.alpha,
            "i_at_minus_one": report.i_at_minus_one,
            "k": report.k,
            "a_invariant": report.a_invariant,
        }

    def populated(self) -> dict[str, int | bool]:
        skip = {"spec", "notes"}
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if f.name not in skip and getattr(self, f.name) is not None
        }

    def mismatches(self, report: DegreeReport, first_derivative: int | None = None) -> list[str]:
        """Fields whose prediction disagrees with the engine's report."""
        seen = self.observed(report)
        if first_derivative is not None:
            seen["first_derivative"] = first_derivative
        out = []
        for name, want in self.populated().items():
            got = seen.get(name)
            if got != want:
                out.append(f"{name}: predicted {want}, got {got}")
        return out

    def to_json(self) -> dict:
        d = {"spec": self.spec.key, "notes": self.notes}
        d.update(self.populated())
        return d


def predict_path(n: int) -> FamilyPrediction:
    alpha = (n + 1) // 2
    r = n % 3
    if r == 1:
        return FamilyPrediction(
            Path(n),
            alpha=alpha,
            deg_h=alpha - 1,
            deg_equals_alpha=False,
            i_at_minus_one=0,
            first_derivative=((n + 2) // 3) * (-1) ** (n - 1),
            k=1,
            a_invariant=-1,
            notes="n = 1 mod 3: I(-1) vanishes, I'(-1) = ((n+2)/3)(-1)^(n-1)",
        )
    value = (-1) ** n if r == 0 else (-1) ** (n - 1)
    return FamilyPrediction(
        Path(n),
        alpha=alpha,
        deg_h=alpha,
        deg_equals_alpha=True,
        i_at_minus_one=value,
        k=0,
        a_invariant=0,
        notes="n = 0, 2 mod 3: I(-1) = +-1",
    )


def predict_cycle(n: int) -> FamilyPrediction:
    value = 2 * (-1) ** n if n % 3 == 0 else (-1) ** (n - 1)
    return FamilyPrediction(
        Cycle(n),
        alpha=n // 2,
        deg_h=n // 2,
        deg_equals_alpha=True,
        i_at_minus_one=value,
        k=0,
        a_invariant=0,
        notes="I(C_n, -1) is never zero",
    )


def predict_star(leaves: int) -> FamilyPrediction:
    return FamilyPrediction(
        Star(leaves),
        alpha=leaves,
        deg_h=leaves,
        deg_equals_alpha=True,
        i_at_minus_one=-1,
        k=0,
        a_invariant=0,
        notes="I(S_n, t) = (1+t)^n + t",
    )


def predict_multipartite(parts) -> FamilyPrediction:
    parts = tuple(parts)
    q, m1 = len(parts), parts[0]
    if q == 1:
        # a single part is edgeless: I = (1+t)^m, h = 1
        return FamilyPrediction(
            CompleteMultipartite(parts),
            alpha=m1,
            deg_h=0,
            deg_equals_alpha=False,
            i_at_minus_one=0,
            k=m1,
            a_invariant=-m1,
            notes="edgeless graph",
        )
    return FamilyPrediction(
        CompleteMultipartite(parts),
        alpha=m1,
        deg_h=m1,
        deg_equals_alpha=True,
        i_at_minus_one=1 - q,
        k=0,
        a_invariant=0,
        notes="I = sum (1+t)^m_i - (q-1)",
    )


def predict_mary_tree(m: int, depth: int, shape: str = "perfect", seed: int = 0) -> FamilyPrediction:
    equal = depth % 3 in (1, 2)
    return FamilyPrediction(
        MAryTree(m, depth, shape, seed),
        deg_equals_alpha=equal,
        notes="all leaves on level depth; deg h = alpha iff depth = 1, 2 mod 3",
    )


def predict_star_triangle(m: int) -> FamilyPrediction:
    odd = m % 2 == 1
    return FamilyPrediction(
        StarTriangle(m),
        alpha=m,
        deg_h=m if odd else m - 1,
        deg_equals_alpha=odd,
        i_at_minus_one=-2 if odd else 0,
        first_derivative=None if odd else 2 * m * (-1) ** (m - 1) + 1,
        k=0 if odd else 1,
        notes="I = (1+2t)^m + t",
    )


def predict_cameron_walker(spec: CameronWalker | StarTriangle) -> FamilyPrediction:
    if isinstance(spec, StarTriangle):
        return predict_star_triangle(spec.m)
    return FamilyPrediction(
        spec,
        deg_equals_alpha=True,
        k=0,
        a_invariant=0,
        notes="bipartite base with whiskered U and pendant triangles on V",
    )


def _alpha_antiregular(n: int) -> int:
    return (n + 1) // 2


def predict_antiregular(n: int, connected: bool = True) -> FamilyPrediction:
    if n < (2 if connected else 3):
        raise ValueError("antiregular predictions need n >= 2 (connected) or n >= 3")
    if connected:
        alpha = _alpha_antiregular(n)
        return FamilyPrediction(
            Antiregular(n, True),
            alpha=alpha,
            deg_h=alpha,
            deg_equals_alpha=True,
            i_at_minus_one=-1,
            k=0,
            a_invariant=0,
            notes="I(A_n) = (1+t)(1 + I(A_{n-2})) - 1",
        )
    alpha = 1 + _alpha_antiregular(n - 1)
    return FamilyPrediction(
        Antiregular(n, False),
        alpha=alpha,
        deg_h=alpha - 1,
        deg_equals_alpha=False,
        i_at_minus_one=0,
        first_derivative=-1,
        k=1,
        a_invariant=-1,
        notes="complement graph K_1 u A_{n-1}: I'(-1) = I(A_{n-1}, -1)",
    )


@dataclass(frozen=True)
class SetupSum:
    terms: tuple[int, ...]
    total: int
    predicate: bool  # total != 1, i.e. deg h = alpha
    min_degree_ok: bool


def bipartite_setup_sum(
    m: int, n: int, removed, budget: int = DEFAULT_BUDGET
) -> SetupSum:
    """Walk ``K_{m,n} = G_0, G_1, ...`` deleting one edge ``u_i v_i`` at a time.

    Term ``i`` is ``I(G_{i-1} - (N(u_i) | N(v_i)), -1)`` with neighbourhoods
    taken in ``G_{i-1}``; the final graph has ``I(-1) = total - 1``.
    """
    spec = CompleteBipartiteMinus(m, n, tuple(removed))
    g = complete_bipartite_minus(m, n)
    terms = []
    for i, j in spec.removed:
        u, v = i, m + j
        cut = g.open_neighborhood(u) | g.open_neighborhood(v)
        rest, _ = g.induced_delete(cut)
        terms.append(indpoly(rest, budget=budget).i_at_minus_one)
        g = g.delete_edge(u, v)
    ok = g.n == 0 or g.min_degree() >= 2
    if not ok:
        warnings.warn(
            f"K_{{{m},{n}}} minus {len(terms)} edges has a vertex of degree < 2",
            stacklevel=2,
        )
    total = sum(terms)
    return SetupSum(tuple(terms), total, total != 1, ok)


def predict_bipartite_minus(spec: CompleteBipartiteMinus) -> FamilyPrediction:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        setup = bipartite_setup_sum(spec.m, spec.n, spec.removed)
    return FamilyPrediction(
        spec,
        deg_equals_alpha=setup.predicate,
        i_at_minus_one=setup.total - 1,
        notes=f"edge-deletion chain sum = {setup.total}",
    )


def predict(spec: FamilySpec) -> FamilyPrediction:
    match spec:
        case Path(n):
            return predict_path(n)
        case Cycle(n):
            return predict_cycle(n)
        case Star(k):
            return predict_star(k)
        case StarTriangle(m):
            return predict_star_triangle(m)
        case CompleteMultipartite(parts):
            return predict_multipartite(parts)
        case MAryTree(m, depth, shape, seed):
            return predict_mary_tree(m, depth, shape, seed)
        case Antiregular(n, connected):
            return predict_antiregular(n, connected)
        case CameronWalker():
            return predict_cameron_walker(spec)
        case CompleteBipartiteMinus():
            return predict_bipartite_minus(spec)
    raise TypeError(f"not a family spec: {spec!r}")


@dataclass(frozen=True)
class MatchingNumbers:
    mu: int
    nu: int


def matching_numbers(g: Graph) -> MatchingNumbers:
    return MatchingNumbers(matching_number(g), induced_matching_number(g))


__all__ = [
    "FamilyPrediction",
    "MatchingNumbers",
    "SetupSum",
    "bipartite_setup_sum",
    "generate",
    "matching_numbers",
    "predict",
    "predict_antiregular",
    "predict_bipartite_minus",
    "predict_cameron_walker",
    "predict_cycle",
    "predict_mary_tree",
    "predict_multipartite",
    "predict_path",
    "predict_star",
    "predict_star_triangle",
]
