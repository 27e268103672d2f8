"""Type 2 poly-Bernoulli numbers and polynomials of integer index k.

The generating function is Ei_k(log(1+t)) e^{xt} / (e^t - 1). Numbers come
from series arithmetic; polynomials are assembled from the numbers by the
binomial (Appell) expansion. An independent construction through classical
Bernoulli polynomials and Stirling numbers is provided by
:func:`theorem9_expand`.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .classical import bernoulli_poly, stirling1_table, fractional_part
from .exact import Polynomial, binomial, poly_compose_affine, rpow
from .report import IdentityReport, PreconditionError
from .series import (
    expm1_series,
    log1p_series,
    polyexp_series,
    series_compose,
    series_inv,
    series_mul,
)

__all__ = [
    "max_index",
    "poly_bernoulli_numbers",
    "poly_bernoulli_number",
    "poly_bernoulli_poly",
    "poly_bernoulli_at_one",
    "poly_bernoulli_function",
    "stirling_weight",
    "theorem2_check",
    "theorem3_check",
    "corollary4_check",
    "theorem5_check",
    "theorem9_expand",
]

DEFAULT_MAX_K = 16


def max_index() -> int:
    """Cap on |k|, from POLYDED_MAX_K (default 16). Only bounds rational growth."""
    raw = os.environ.get("POLYDED_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"POLYDED_MAX_K must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("POLYDED_MAX_K must be nonnegative")
    return value


def _check_k(k: int) -> None:
    cap = max_index()
    if abs(k) > cap:
        raise PreconditionError(f"|k| = {abs(k)} exceeds the configured bound {cap}")


# k -> longest computed run of numbers; a truncation is a prefix of any longer one
_numbers_cache: dict = {}


def _numbers(k: int, max_n: int) -> Tuple[Fraction, ...]:
    have = _numbers_cache.get(k, ())
    if len(have) > max_n:
        return have[: max_n + 1]
    # Ei_k(log(1+t))/t * t/(e^t - 1); both factors have a nonzero constant term.
    order = max(max_n, 2 * len(have)) + 1
    outer = series_compose(polyexp_series(k, order), log1p_series(order))
    left = outer.shift_down()
    right = series_inv(expm1_series(order).shift_down())
    run = tuple(series_mul(left, right).egf_coefficients())
    _numbers_cache[k] = run
    return run[: max_n + 1]


def poly_bernoulli_numbers(k: int, max_n: int) -> List[Fraction]:
    """B_0^(k), ..., B_max_n^(k)."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    _check_k(k)
    return list(_numbers(k, max_n))


def poly_bernoulli_number(k: int, n: int) -> Fraction:
    _check_k(k)
    return _numbers(k, n)[n]


@lru_cache(maxsize=None)
def poly_bernoulli_poly(k: int, n: int) -> Polynomial:
    """B_n^(k)(x) = sum_l C(n, l) B_l^(k) x^(n-l)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nums = poly_bernoulli_numbers(k, n)
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        coeffs[n - l] = binomial(n, l) * nums[l]
    return Polynomial(coeffs)


def poly_bernoulli_at_one(k: int, n: int) -> Fraction:
    return poly_bernoulli_poly(k, n)(1)


def poly_bernoulli_function(k: int, n: int, x) -> Fraction:
    """Periodic extension B_n^(k)(<x>)."""
    return poly_bernoulli_poly(k, n)(fractional_part(x))


def stirling_weight(k: int, n: int, table=None) -> Fraction:
    """sum_{m=1}^{n} S_1(n, m) / m^(k-1)."""
    if table is None:
        table = stirling1_table(n)
    return sum((table[n, m] * rpow(m, 1 - k) for m in range(1, n + 1)), Fraction(0))


# ---------------------------------------------------------------- identities

def theorem2_check(k: int, n: int) -> IdentityReport:
    """B_n^(k)(1) - B_n^(k) against the Stirling-weighted sum."""
    if n < 1:
        raise PreconditionError("theorem2 requires n >= 1")
    lhs = poly_bernoulli_at_one(k, n) - poly_bernoulli_number(k, n)
    rhs = stirling_weight(k, n)
    return IdentityReport("theorem2", {"n": n, "k": k}, lhs, rhs)


def _b1(k: int, n: int) -> Fraction:
    # B_n^(k)(1), zero for negative n (only reached under a vanishing binomial)
    return poly_bernoulli_at_one(k, n) if n >= 0 else Fraction(0)


def _b0(k: int, n: int) -> Fraction:
    return poly_bernoulli_number(k, n) if n >= 0 else Fraction(0)


def _theorem3_rhs(k: int, s: int, p: int) -> Fraction:
    total = Fraction(0)
    c1, c2 = binomial(p + 1, s), binomial(p + 2, s)
    if c1:
        total += Fraction(c1, p + 1) * _b1(k, p - s + 1)
    if c2:
        total += Fraction((s - 1) * c2, (p + 1) * (p + 2)) * _b1(k, p - s + 2)
    return total


def _theorem3_sum(k: int, s: int, p: int, upper: int) -> Fraction:
    total = Fraction(0)
    for nu in range(0, upper + 1):
        c = binomial(p, nu) * binomial(p - nu + 2, s)
        if c:
            total += Fraction(c, p - nu + 2) * poly_bernoulli_number(k, nu)
    return total


def _check_sp(s: int, p: int) -> None:
    if s < 1 or p < 1:
        raise PreconditionError("s and p must be positive integers")


def theorem3_check(k: int, s: int, p: int) -> IdentityReport:
    """Binomial-weighted sum of B_nu^(k) against values at 1.

    Any s >= 1 is accepted; for s > p + 2 every binomial vanishes and the
    check degenerates to 0 = 0.
    """
    _check_sp(s, p)
    lhs = _theorem3_sum(k, s, p, p)
    rhs = _theorem3_rhs(k, s, p)
    return IdentityReport("theorem3", {"p": p, "k": k, "s": s}, lhs, rhs)


def corollary4_check(k: int, s: int, p: int) -> IdentityReport:
    _check_sp(s, p)
    lhs = _theorem3_sum(k, s, p, p - s + 1)
    c = binomial(p, s - 2) if s >= 2 else 0
    rhs = _theorem3_rhs(k, s, p) - Fraction(c, s) * _b0(k, p - s + 2)
    return IdentityReport("corollary4", {"p": p, "k": k, "s": s}, lhs, rhs)


def theorem5_check(k: int, p: int) -> IdentityReport:
    """Two closed forms of the integral of x B_p^(k)(x) over [0, 1].

    The left side is additionally compared with term-by-term integration of
    the polynomial itself (``details["integral"]``).
    """
    if p < 1:
        raise PreconditionError("p must be a positive integer")
    lhs = sum(
        (Fraction(binomial(p, s), p + 2 - s) * poly_bernoulli_number(k, s) for s in range(p + 1)),
        Fraction(0),
    )
    rhs = (
        poly_bernoulli_at_one(k, p + 1) / (p + 1)
        - poly_bernoulli_at_one(k, p + 2) / ((p + 1) * (p + 2))
        + poly_bernoulli_number(k, p + 2) / ((p + 1) * (p + 2))
    )
    integral = (Polynomial([0, 1]) * poly_bernoulli_poly(k, p)).integrate(0, 1)
    return IdentityReport(
        "theorem5", {"p": p, "k": k}, lhs, rhs, details={"integral": integral == lhs}
    )


def theorem9_expand(k: int, n: int, d: int, table=None) -> Polynomial:
    """B_n^(k)(x) rebuilt from classical Bernoulli polynomials at (x+i)/d.

    sum_j sum_i sum_l C(n, j) d^(j-1) B_j((x+i)/d) S_1(n-j+1, l) / ((n-j+1) l^(k-1))

    Shares nothing with the generating-function route except exact arithmetic.
    """
    if d < 1:
        raise PreconditionError("d must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_k(k)
    if table is None:
        table = stirling1_table(n + 1)
    out = Polynomial()
    for j in range(n + 1):
        r = n - j + 1
        weight = stirling_weight(k, r, table) / r
        if weight == 0:
            continue
        bj = bernoulli_poly(j)
        shifted = Polynomial()
        for i in range(d):
            shifted = shifted + poly_compose_affine(bj, Fraction(1, d), Fraction(i, d))
        out = out + shifted * (binomial(n, j) * rpow(d, j - 1) * weight)
    return out
