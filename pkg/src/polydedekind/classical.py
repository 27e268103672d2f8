"""Bernoulli numbers, polynomials and functions, signed Stirling numbers of
the first kind, power sums, and the distribution (multiplication) relations.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from .exact import Polynomial, as_fraction, binomial, poly_compose_affine, rpow
from .report import IdentityReport, PreconditionError
from .series import expm1_series, series_inv

__all__ = [
    "bernoulli_numbers",
    "bernoulli_numbers_via_series",
    "bernoulli_number",
    "bernoulli_poly",
    "fractional_part",
    "floor",
    "bernoulli_function",
    "sawtooth",
    "Stirling1Table",
    "stirling1_table",
    "stirling_override",
    "power_sum",
    "distribution_poly_holds",
    "verify_distribution",
]


# ---------------------------------------------------------------- Bernoulli

_bern: list = [Fraction(1)]


def bernoulli_numbers(max_n: int) -> Tuple[Fraction, ...]:
    """B_0..B_max_n with B_1 = -1/2 (generating function t/(e^t - 1)).

    Uses sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1; results are memoised
    in a module-level list that only ever grows.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    for n in range(len(_bern), max_n + 1):
        s = sum((binomial(n + 1, j) * _bern[j] for j in range(n)), Fraction(0))
        _bern.append(-s / (n + 1))
    return tuple(_bern[: max_n + 1])


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def bernoulli_numbers_via_series(max_n: int) -> Tuple[Fraction, ...]:
    """Independent route: n! [t^n] of the inverse of (e^t - 1)/t."""
    quotient = expm1_series(max_n + 1).shift_down()
    return tuple(series_inv(quotient).egf_coefficients())


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Polynomial:
    """B_n(x) = sum_l C(n, l) B_l x^(n-l)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    b = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        coeffs[n - l] = binomial(n, l) * b[l]
    return Polynomial(coeffs)


def floor(x) -> int:
    """Greatest integer not exceeding x (rounds toward -inf)."""
    return math.floor(as_fraction(x))


def fractional_part(x) -> Fraction:
    x = as_fraction(x)
    return x - math.floor(x)


def bernoulli_function(n: int, x) -> Fraction:
    """Periodic Bernoulli function B_n(<x>)."""
    return bernoulli_poly(n)(fractional_part(x))


def sawtooth(x) -> Fraction:
    """((x)): zero at integers, <x> - 1/2 elsewhere."""
    x = as_fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return fractional_part(x) - Fraction(1, 2)


# ---------------------------------------------------------------- Stirling

class Stirling1Table:
    """Signed Stirling numbers of the first kind S_1(n, m), 0 <= m <= n <= max_n.

    Index with ``table[n, m]``; entries outside the triangle read as 0.
    """

    __slots__ = ("max_n", "_rows")

    def __init__(self, max_n: int, rows):
        self.max_n = max_n
        self._rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, nm: Tuple[int, int]) -> int:
        n, m = nm
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table of size {self.max_n}")
        if m < 0 or m > n:
            return 0
        return self._rows[n][m]

    def row(self, n: int) -> Tuple[int, ...]:
        return self._rows[n]

    def __eq__(self, other) -> bool:
        if isinstance(other, Stirling1Table):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Stirling1Table(max_n={self.max_n})"


# (n, m) -> replacement value; test hook only
_stirling_overrides: Dict[Tuple[int, int], int] = {}


@lru_cache(maxsize=None)
def _stirling_rows(max_n: int) -> Tuple[Tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(max_n):
        prev = rows[-1]
        # S_1(n+1, m) = S_1(n, m-1) - n S_1(n, m)
        new = [0] * (n + 2)
        for m in range(1, n + 2):
            left = prev[m - 1]
            here = prev[m] if m <= n else 0
            new[m] = left - n * here
        rows.append(tuple(new))
    return tuple(rows)


def stirling1_table(max_n: int) -> Stirling1Table:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rows = _stirling_rows(max_n)
    if _stirling_overrides:
        rows = [list(r) for r in rows]
        for (n, m), v in _stirling_overrides.items():
            if 0 <= m <= n <= max_n:
                rows[n][m] = v
    return Stirling1Table(max_n, rows)


@contextmanager
def stirling_override(entries: Dict[Tuple[int, int], int]) -> Iterator[None]:
    """Temporarily replace Stirling entries, for checking that verifiers
    actually notice a wrong input."""
    saved = dict(_stirling_overrides)
    _stirling_overrides.update(entries)
    try:
        yield
    finally:
        _stirling_overrides.clear()
        _stirling_overrides.update(saved)


# ---------------------------------------------------------------- power sums

def power_sum(j: int, n: int) -> Fraction:
    """sum_{l=0}^{n-1} l^j via (B_{j+1}(n) - B_{j+1}) / (j+1)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if n < 1:
        raise ValueError("n must be positive")
    return (bernoulli_poly(j + 1)(n) - bernoulli_number(j + 1)) / (j + 1)


# ---------------------------------------------------------------- distribution

@lru_cache(maxsize=None)
def distribution_poly_holds(n: int, d: int) -> bool:
    """sum_{i<d} B_n((x+i)/d) == d^(1-n) B_n(x), compared coefficient by coefficient."""
    bn = bernoulli_poly(n)
    total = Polynomial()
    for i in range(d):
        total = total + poly_compose_affine(bn, Fraction(1, d), Fraction(i, d))
    return total == bn * rpow(d, 1 - n)


def verify_distribution(n: int, d: int, x) -> IdentityReport:
    """Check the three distribution relations at x for the pair (n, d).

    lhs/rhs carry the periodic form sum_i Bbar_n((x+i)/d) = d^(1-n) Bbar_n(x);
    ``details`` records the polynomial form, its value at x, and the
    <x>-versus-x comparison.
    """
    if d < 1:
        raise PreconditionError("d must be a positive integer")
    x = as_fraction(x)
    bn = bernoulli_poly(n)
    scale = rpow(d, 1 - n)

    a_poly = distribution_poly_holds(n, d)
    a_val = sum((bn((x + i) / d) for i in range(d)), Fraction(0)) == scale * bn(x)

    periodic = sum((bernoulli_function(n, (x + i) / d) for i in range(d)), Fraction(0))
    b_rhs = scale * bernoulli_function(n, x)

    frac = fractional_part(x)
    c_lhs = sum((bn((frac + i) / d) for i in range(d)), Fraction(0))

    return IdentityReport(
        "lemma1",
        {"n": n, "d": d},
        periodic,
        b_rhs,
        details={"a_poly": a_poly, "a_value": a_val, "c": c_lhs == periodic},
    )
