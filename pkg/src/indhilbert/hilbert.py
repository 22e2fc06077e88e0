"""h-polynomial, Hilbert function and a-invariant of R/I(G) from I(G, t)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .engine import IndependenceProfile
from .graph import Graph
from .poly import IntPolynomial, add_lists, assemble_h, mul_lists, to_json


class InconsistentReport(AssertionError):
    pass


@dataclass(frozen=True)
class DegreeReport:
    alpha: int
    i_at_minus_one: int
    k: int
    deg_h: int
    a_invariant: int
    h_poly: IntPolynomial
    s: tuple[int, ...]

    @property
    def deg_equals_alpha(self) -> bool:
        return self.deg_h == self.alpha

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "I_at_minus_one": self.i_at_minus_one,
            "k": self.k,
            "deg_h": self.deg_h,
            "a_invariant": self.a_invariant,
            "h_coeffs": to_json(self.h_poly),
            "s": [str(x) for x in self.s],
        }


def degree_report(profile: IndependenceProfile) -> DegreeReport:
    """Read the h-degree off the Taylor expansion of I(G, t) at -1.

    ``k`` is the first index with a nonzero Taylor coefficient, so the
    predicted degree is ``alpha - k``; it is checked against the degree of
    the assembled h-polynomial and a mismatch raises ``InconsistentReport``.
    """
    c = profile.taylor
    alpha = profile.alpha
    k = c.first_nonzero()
    h = assemble_h(c, alpha)
    if h.degree != alpha - k:
        raise InconsistentReport(f"deg h = {h.degree} but alpha - k = {alpha - k}")
    return DegreeReport(
        alpha=alpha,
        i_at_minus_one=c[0],
        k=k,
        deg_h=h.degree,
        a_invariant=h.degree - alpha,
        h_poly=h,
        s=profile.s,
    )


def h_direct(profile: IndependenceProfile) -> IntPolynomial:
    """``sum_i s_i t^i (1 - t)^(alpha - i)`` straight from the face counts."""
    alpha = profile.alpha
    acc: list[int] = []
    for i, s_i in enumerate(profile.s):
        term = [0] * i + [s_i]
        for _ in range(alpha - i):
            term = mul_lists(term, [1, -1])
        acc = add_lists(acc, term)
    return IntPolynomial(acc)


@dataclass(frozen=True)
class HilbertPrefix:
    values: tuple[int, ...]

    @property
    def D(self) -> int:
        return len(self.values) - 1


def hilbert_prefix(report: DegreeReport, D: int) -> HilbertPrefix:
    """HF(0..D): coefficients of h(t) / (1 - t)^alpha, by alpha rounds of prefix sums."""
    if D < 0:
        raise ValueError("cutoff must be >= 0")
    vals = [report.h_poly[i] for i in range(D + 1)]
    for _ in range(report.alpha):
        run = 0
        for i, x in enumerate(vals):
            run += x
            vals[i] = run
    return HilbertPrefix(tuple(vals))


MONOMIAL_MAX_N = 10
MONOMIAL_MAX_D = 8


def monomial_oracle(g: Graph, d: int) -> int:
    """Number of degree-``d`` monomials whose support is an independent set."""
    if g.n > MONOMIAL_MAX_N or d > MONOMIAL_MAX_D:
        raise ValueError(f"monomial oracle limited to n <= {MONOMIAL_MAX_N}, d <= {MONOMIAL_MAX_D}")
    if d < 0:
        raise ValueError("degree must be >= 0")
    nbr = g.masks
    count = 0
    for mono in combinations_with_replacement(range(g.n), d):
        support = set(mono)
        if all(not (nbr[v] >> u & 1) for v in support for u in support):
            count += 1
    return count
