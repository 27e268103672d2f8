"""Truncated formal power series with exact rational coefficients.

Coefficients are stored in ordinary normalization (``c[n]`` multiplies
``t**n``); callers multiply by ``n!`` themselves when they want the
exponential-generating-function reading.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .exact import as_fraction, rpow

__all__ = [
    "TruncSeries",
    "SeriesError",
    "series_mul",
    "series_inv",
    "series_compose",
    "log1p_series",
    "expm1_series",
    "polyexp_series",
    "identity_series",
    "one_series",
]


class SeriesError(ValueError):
    """Raised for order mismatches and for undefined inverse/composition."""


class TruncSeries:
    """Sum of c_n t^n for n <= order. Zeros are kept; the order is semantic."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_fraction(c) for c in coeffs)
        if not cs:
            raise SeriesError("a truncated series needs at least one coefficient")
        self._c = cs

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(str(c) for c in self._c)}])"

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(a + b for a, b in zip(self._c, other._c))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        _check_orders(self, other)
        return TruncSeries(a - b for a, b in zip(self._c, other._c))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncSeries(c * other for c in self._c)
        return NotImplemented

    __rmul__ = __mul__

    def shift_down(self) -> "TruncSeries":
        """Divide by t. Requires c_0 == 0; the order drops by one."""
        if self._c[0] != 0:
            raise SeriesError("cannot divide by t: constant term is nonzero")
        if self.order == 0:
            raise SeriesError("cannot divide an order-0 series by t")
        return TruncSeries(self._c[1:])

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise SeriesError("truncation cannot raise the order")
        return TruncSeries(self._c[: order + 1])

    def egf_coefficients(self) -> list:
        """n! * c_n for every n, i.e. the coefficients read against t^n/n!."""
        return [factorial(n) * c for n, c in enumerate(self._c)]


def _check_orders(a: TruncSeries, b: TruncSeries) -> None:
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")


def one_series(order: int) -> TruncSeries:
    return TruncSeries([1] + [0] * order)


def identity_series(order: int) -> TruncSeries:
    """The series t (just 0 when order is 0)."""
    return TruncSeries(([0, 1] + [0] * order)[: order + 1])


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return TruncSeries(out)


def series_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse, b_n = -(1/a_0) * sum_{i=1}^{n} a_i b_{n-i}."""
    a0 = a[0]
    if a0 == 0:
        raise SeriesError("series is not invertible: constant term is zero")
    ac = a.coeffs
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order + 1):
        s = Fraction(0)
        for i in range(1, n + 1):
            if ac[i]:
                s += ac[i] * b[n - i]
        b.append(-s * inv0)
    return TruncSeries(b)


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(t)), Horner scheme over truncated series."""
    _check_orders(outer, inner)
    if inner[0] != 0:
        raise SeriesError("composition undefined: inner series has nonzero constant term")
    n = outer.order
    acc = TruncSeries([0] * (n + 1))
    for c in reversed(outer.coeffs):
        acc = series_mul(acc, inner)
        acc = TruncSeries((acc[0] + c,) + acc.coeffs[1:])
    return acc


def log1p_series(order: int) -> TruncSeries:
    """log(1 + t) = sum (-1)^(n-1) t^n / n."""
    _check_order_arg(order)
    return TruncSeries([0] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)])


def expm1_series(order: int) -> TruncSeries:
    """e^t - 1 = sum_{n>=1} t^n / n!."""
    _check_order_arg(order)
    return TruncSeries([0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)])


def polyexp_series(k: int, order: int) -> TruncSeries:
    """Polyexponential Ei_k(t) = sum_{n>=1} t^n / (n^k (n-1)!), any integer k."""
    _check_order_arg(order)
    return TruncSeries(
        [0] + [1 / (rpow(n, k) * factorial(n - 1)) for n in range(1, order + 1)]
    )


def _check_order_arg(order: int) -> None:
    if order < 0:
        raise SeriesError("order must be nonnegative")
