"""Exact scalars and dense univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator, so equality of two results is structural.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

__all__ = [
    "Fraction",
    "Polynomial",
    "NEG_INF",
    "as_fraction",
    "binomial",
    "rpow",
    "poly_eval",
    "poly_derivative",
    "poly_compose_affine",
]

RationalLike = Union[int, Fraction]

# degree of the zero polynomial
NEG_INF = float("-inf")


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero when k lies outside [0, n]."""
    if n < 0:
        raise ValueError("binomial: n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rpow(base: RationalLike, exponent: int) -> Fraction:
    """Exact power with an integer exponent; negative exponents invert."""
    base = as_fraction(base)
    if exponent < 0:
        if base == 0:
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        return 1 / base ** (-exponent)
    return base ** exponent


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> "Polynomial":
        return cls([0] * n + [c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        if not self._coeffs:
            return NEG_INF
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return Polynomial(c * a for a in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def compose_affine(self, a: RationalLike, b: RationalLike) -> "Polynomial":
        return poly_compose_affine(self, a, b)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self._coeffs)])

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        prim = self.antiderivative()
        return prim(hi) - prim(lo)


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Horner evaluation of ``p`` at ``x``."""
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_compose_affine(p: Polynomial, a: RationalLike, b: RationalLike) -> Polynomial:
    """Return q with q(x) = p(a*x + b), expanded exactly.

    Horner over polynomials: q = (...(c_n * L + c_{n-1}) * L + ...) with L = a*x + b.
    """
    lin = Polynomial([as_fraction(b), as_fraction(a)])
    acc = Polynomial()
    for c in reversed(p.coeffs):
        acc = acc * lin + Polynomial.constant(c)
    return acc

