"""Exact univariate polynomials over Python integers.

Coefficients are stored densely, lowest degree first, with trailing zeros
trimmed.  The zero polynomial has no coefficients and its degree is ``None``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from math import comb


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        self.coeffs: tuple[int, ...] = tuple(_trim(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def binomial_power(cls, a: int, b: int, e: int) -> IntPolynomial:
        """``(a + b t) ** e`` expanded exactly."""
        return cls(comb(e, j) * a ** (e - j) * b**j for j in range(e + 1))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return add(self, -_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return add(_coerce(other), -self)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        return eval_int(self, x)


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


def add_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def mul_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return _trim(out)


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(add_lists(p.coeffs, q.coeffs))


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(mul_lists(p.coeffs, q.coeffs))


def derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * a for i, a in enumerate(p.coeffs) if i)


def eval_int(p: IntPolynomial, x: int) -> int:
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def shift(p: IntPolynomial, s: int) -> IntPolynomial:
    """Coefficients of ``p(t + s)`` by repeated synthetic division."""
    a = list(p.coeffs)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += s * a[j + 1]
    return IntPolynomial(a)


class TaylorAtMinusOne(tuple):
    """Coefficients ``c`` with ``p(t) = sum_j c[j] * (1 + t)**j``.

    ``c[j]`` equals the j-th derivative of ``p`` at -1 divided by ``j!``.
    """

    __slots__ = ()

    def reassemble(self) -> IntPolynomial:
        return shift(IntPolynomial(self), 1)

    def first_nonzero(self) -> int:
        for j, c in enumerate(self):
            if c:
                return j
        raise ValueError("all Taylor coefficients vanish")


def taylor_at_minus_one(p: IntPolynomial) -> TaylorAtMinusOne:
    if p.is_zero():
        raise ValueError("Taylor data of the zero polynomial is undefined")
    # p(t) = q(1 + t)  <=>  q(u) = p(u - 1)
    return TaylorAtMinusOne(shift(p, -1).coeffs)


def assemble_h(c: Sequence[int], alpha: int) -> IntPolynomial:
    """``sum_i c[i] * (1 - t)**(alpha - i)`` for ``i = 0..alpha``."""
    if len(c) != alpha + 1:
        raise ValueError(f"need {alpha + 1} Taylor coefficients, got {len(c)}")
    # Horner in (1 - t): ((c0 (1-t) + c1)(1-t) + c2) ...
    one_minus_t = [1, -1]
    acc: list[int] = []
    for ci in c:
        acc = add_lists(mul_lists(acc, one_minus_t), [ci])
    return IntPolynomial(acc)


def render(p: IntPolynomial, var: str = "t") -> str:
    """Human form, low degree first: ``1 + 3t + t^2``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts)


def to_json(p: IntPolynomial) -> list[str]:
    return [str(a) for a in p.coeffs]


def from_json(items: Iterable[str]) -> IntPolynomial:
    return IntPolynomial(int(s) for s in items)
