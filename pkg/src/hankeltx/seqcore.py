"""Exact scalars, sequences, Catalan numbers and truncated power-series reversion.

Every value is a :class:`fractions.Fraction`; nothing in the package touches
floating point.  ``0 ** 0 == 1`` throughout, so ``beta = 0`` is a legal
parameter.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import InsufficientPrefix, NotRevertible, ConsistencyError

Rat = Fraction
RatLike = Union[int, str, Fraction]


def rat(x: RatLike) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Params:
    """The pair (alpha, beta) of ``Q(x) = x / (1 + alpha x + beta x^2)``."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", rat(self.alpha))
        object.__setattr__(self, "beta", rat(self.beta))

    @classmethod
    def parse(cls, text: str) -> "Params":
        """Parse ``"alpha,beta"`` or ``"alpha beta"``."""
        parts = text.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"expected two rationals, got {text!r}")
        return cls(Fraction(parts[0]), Fraction(parts[1]))

    def __str__(self):
        return f"({self.alpha},{self.beta})"


@dataclass(frozen=True)
class Seq(Sequence):
    """A finite prefix ``s_0, s_1, ...`` of an infinite sequence."""

    values: tuple = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(rat(v) for v in self.values))

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Seq(self.values[i], self.label)
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def need(self, count: int, what: str = "operation") -> None:
        if count > len(self.values):
            raise InsufficientPrefix(
                f"{what} needs {count} terms of {self.label or 'sequence'}, have {len(self.values)}"
            )


def as_seq(s: Seq | Iterable[RatLike], label: str = "") -> Seq:
    if isinstance(s, Seq):
        return s
    return Seq(tuple(s), label)


def catalan(n: int) -> Fraction:
    if n < 0:
        raise ValueError("catalan index must be non-negative")
    return Fraction(math.comb(2 * n, n) // (n + 1))


def scaled_catalan(beta: RatLike, n: int) -> Fraction:
    """``beta**n * C_n``."""
    return rat(beta) ** n * catalan(n)


def catalan_seq(length: int, beta: RatLike = 1) -> Seq:
    beta = rat(beta)
    label = "catalan" if beta == 1 else f"catalan*{beta}^n"
    return Seq(tuple(scaled_catalan(beta, n) for n in range(length)), label)


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of ``x^0 .. x^(order-1)``; products truncate at the shorter order."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[:order])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * order
        for i in range(order):
            if a[i]:
                for j in range(order - i):
                    out[i + j] += a[i] * b[j]
        return PowerSeries(tuple(out))

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """``self(g(x))``; requires ``g[0] == 0``."""
        if g.order and g.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        order = min(self.order, g.order)
        result = [Fraction(0)] * order
        power = PowerSeries((1,) + (0,) * (order - 1)) if order else PowerSeries(())
        g = g.truncate(order)
        for k in range(order):
            fk = self.coeffs[k]
            if fk:
                for i in range(order):
                    result[i] += fk * power.coeffs[i]
            power = power * g
        return PowerSeries(tuple(result))

    @classmethod
    def quotient(cls, num: Sequence[RatLike], den: Sequence[RatLike], order: int) -> "PowerSeries":
        """Expand the rational function ``num(x)/den(x)`` to ``order`` terms."""
        num = [rat(c) for c in num]
        den = [rat(c) for c in den]
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        out = []
        for n in range(order):
            acc = num[n] if n < len(num) else Fraction(0)
            for k in range(1, min(n, len(den) - 1) + 1):
                acc -= den[k] * out[n - k]
            out.append(acc / den[0])
        return cls(tuple(out))


def q_series(p: Params, order: int) -> PowerSeries:
    """``x / (1 + alpha x + beta x^2)`` to ``order`` terms."""
    return PowerSeries.quotient((0, 1), (1, p.alpha, p.beta), order)


def revert_series(f: PowerSeries, order: int | None = None) -> PowerSeries:
    """Compositional inverse ``g`` with ``f(g(x)) = g(f(x)) = x + O(x^order)``.

    Coefficients are solved one order at a time: ``[x^n] f(g)`` is linear in
    ``g_n`` with slope ``f_1``, and every other contribution only involves
    ``g_1 .. g_(n-1)``.
    """
    if order is None:
        order = f.order
    if order > f.order:
        raise ValueError(f"order {order} exceeds the series order {f.order}")
    if f.order < 2 or f.coeffs[0] != 0 or f.coeffs[1] == 0:
        raise NotRevertible("series must start 0 + f1*x + ... with f1 != 0")
    if order < 2:
        return PowerSeries((0,) * order)
    f1 = f.coeffs[1]
    g = [Fraction(0)] * order
    g[1] = 1 / f1
    for n in range(2, order):
        gs = PowerSeries(tuple(g[: n + 1]))
        power = gs
        rest = Fraction(0)
        for k in range(2, n + 1):
            power = power * gs
            if f.coeffs[k]:
                rest += f.coeffs[k] * power.coeffs[n]
        g[n] = -rest / f1
    return PowerSeries(tuple(g))


def u_direct(p: Params, n: int) -> Fraction:
    """``u_n = sum_k C(n-1, 2k) C_k alpha^(n-2k-1) beta^k``; ``u_0 = 0``."""
    total = Fraction(0)
    for k in range((n - 1) // 2 + 1):
        total += binom(n - 1, 2 * k) * catalan(k) * p.alpha ** (n - 2 * k - 1) * p.beta ** k
    return total


def u_sequence(p: Params, length: int) -> Seq:
    """Reversion of ``Q`` by two routes, checked term by term."""
    if length < 1:
        raise ValueError("length must be at least 1")
    order = max(length, 2)
    reverted = revert_series(q_series(p, order)).coeffs[:length]
    direct = tuple(u_direct(p, n) for n in range(length))
    if reverted != direct:
        raise ConsistencyError(f"reversion and direct sum disagree at {p}")
    return Seq(direct, f"u{p}")


def shift(s: Seq | Iterable[RatLike], k: int) -> Seq:
    s = as_seq(s)
    if k < 0:
        raise ValueError("shift must be non-negative")
    s.need(k, "shift")
    return Seq(s.values[k:], f"{s.label}>>{k}" if s.label else "")
