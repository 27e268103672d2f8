"""Dedekind sums, Apostol's generalized sums, poly-Dedekind sums, and the
closed forms and reciprocity relations they satisfy.

Every sum here is a finite exact sum. The summation index mu runs over
1..m-1 for the weighted sums; including mu = 0 would add a zero term.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Tuple

from .classical import (
    bernoulli_function,
    bernoulli_number,
    bernoulli_poly,
    floor,
    sawtooth,
    stirling1_table,
)
from .exact import binomial, rpow
from .polybernoulli import (
    poly_bernoulli_at_one,
    poly_bernoulli_function,
    poly_bernoulli_number,
    poly_bernoulli_poly,
    stirling_weight,
)
from .report import IdentityReport, PreconditionError, SumParams

__all__ = [
    "CoprimeError",
    "dedekind_sum",
    "dedekind_sum_forms",
    "apostol_sum",
    "poly_dedekind_sum",
    "poly_dedekind_closed_form_h1",
    "classical_reciprocity_check",
    "apostol_reciprocity_check",
    "theorem10_rhs",
    "theorem10_check",
    "corollary11_rhs",
    "corollary11_check",
    "proposition6_check",
    "theorem7_check",
    "theorem8_check",
    "sum_table",
]


class CoprimeError(PreconditionError):
    pass


def _positive(**kw) -> None:
    for name, v in kw.items():
        if v < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {v}")


def _coprime(h: int, m: int) -> None:
    _positive(h=h, m=m)
    g = gcd(h, m)
    if g != 1:
        raise CoprimeError(f"reciprocity needs gcd(h, m) = 1, got gcd({h}, {m}) = {g}")


def _odd_at_least_3(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise PreconditionError(f"p must be an odd integer >= 3, got {p}")


# ---------------------------------------------------------------- sums

def dedekind_sum(h: int, m: int) -> Fraction:
    """S(h, m) = sum_{mu=1}^{m} ((mu/m)) ((h mu/m))."""
    _positive(m=m)
    return sum(
        (sawtooth(Fraction(mu, m)) * sawtooth(Fraction(h * mu, m)) for mu in range(1, m + 1)),
        Fraction(0),
    )


def dedekind_sum_forms(h: int, m: int) -> Tuple[Fraction, Fraction, Fraction]:
    """S(h, m) three ways: sawtooth product, (mu/m)((h mu/m)), and the
    product of first Bernoulli functions. The last needs gcd(h, m) = 1 to
    agree with the other two."""
    _positive(m=m)
    sawtooth_form = dedekind_sum(h, m)
    weighted = sum(
        (Fraction(mu, m) * sawtooth(Fraction(h * mu, m)) for mu in range(1, m + 1)),
        Fraction(0),
    )
    bern = sum(
        (
            bernoulli_function(1, Fraction(mu, m)) * bernoulli_function(1, Fraction(h * mu, m))
            for mu in range(1, m)
        ),
        Fraction(0),
    )
    return sawtooth_form, weighted, bern


def apostol_sum(p: int, h: int, m: int) -> Fraction:
    """S_p(h, m) = sum_{mu=1}^{m-1} (mu/m) Bbar_p(h mu/m)."""
    _positive(p=p, m=m)
    return sum(
        (Fraction(mu, m) * bernoulli_function(p, Fraction(h * mu, m)) for mu in range(1, m)),
        Fraction(0),
    )


def poly_dedekind_sum(k: int, p: int, h: int, m: int) -> Fraction:
    """S_p^(k)(h, m) = sum_{mu=1}^{m-1} (mu/m) Bbar_p^(k)(h mu/m)."""
    _positive(p=p, m=m)
    return sum(
        (Fraction(mu, m) * poly_bernoulli_function(k, p, Fraction(h * mu, m)) for mu in range(1, m)),
        Fraction(0),
    )


def poly_dedekind_closed_form_h1(k: int, p: int, m: int) -> Fraction:
    """S_p^(k)(1, m) via power sums collapsed to Bernoulli numbers:

    m^-p sum_nu C(p, nu) B_nu^(k)/(p+2-nu) sum_{i=0}^{p+1-nu} C(p+2-nu, i) B_i m^(p+1-i)
    """
    _positive(p=p, m=m)
    total = Fraction(0)
    for nu in range(p + 1):
        inner = sum(
            (binomial(p + 2 - nu, i) * bernoulli_number(i) * rpow(m, p + 1 - i) for i in range(p + 2 - nu)),
            Fraction(0),
        )
        total += Fraction(binomial(p, nu), p + 2 - nu) * poly_bernoulli_number(k, nu) * inner
    return total / rpow(m, p)


# ---------------------------------------------------------------- classical reciprocity

def classical_reciprocity_check(h: int, m: int) -> IdentityReport:
    _coprime(h, m)
    lhs = dedekind_sum(h, m) + dedekind_sum(m, h)
    rhs = Fraction(1, 12) * (Fraction(h, m) + Fraction(1, h * m) + Fraction(m, h)) - Fraction(1, 4)
    return IdentityReport("classical-reciprocity", {"h": h, "m": m}, lhs, rhs)


def apostol_reciprocity_check(p: int, h: int, m: int) -> IdentityReport:
    """Apostol's reciprocity, gated to odd p as in his theorem."""
    _coprime(h, m)
    if p < 1 or p % 2 == 0:
        raise PreconditionError(f"Apostol reciprocity is only asserted for odd p, got p={p}")
    lhs = (p + 1) * (h * m**p * apostol_sum(p, h, m) + m * h**p * apostol_sum(p, m, h))
    rhs = p * bernoulli_number(p + 1) + sum(
        (
            binomial(p + 1, s) * (-1) ** s * bernoulli_number(s) * bernoulli_number(p + 1 - s)
            * h**s * m ** (p + 1 - s)
            for s in range(p + 2)
        ),
        Fraction(0),
    )
    return IdentityReport("apostol-reciprocity", {"h": h, "m": m, "p": p}, lhs, rhs)


# ---------------------------------------------------------------- poly-Dedekind reciprocity

def theorem10_rhs(k: int, p: int, h: int, m: int, table=None) -> Fraction:
    """Quadruple sum over mu < m, j <= p, nu < h, 1 <= l <= p-j+1.

    The l-sum does not depend on mu or nu, so it is folded into one
    Stirling weight per j before the (mu, nu) double sum. Arguments of the
    Bernoulli functions lie in [0, 2) and are reduced mod 1.
    """
    _positive(p=p, h=h, m=m)
    if table is None:
        table = stirling1_table(p + 1)
    mh = m * h
    total = Fraction(0)
    for j in range(p + 1):
        r = p - j + 1
        weight = stirling_weight(k, r, table) / r
        if weight == 0:
            continue
        coef = rpow(mh, j - 1) * binomial(p, j) * weight
        mpow, hpow = m ** (p - j), h ** (p - j)
        inner = Fraction(0)
        for mu in range(m):
            for nu in range(h):
                w = mu * h * mpow + m * nu * hpow
                if w:
                    inner += w * bernoulli_function(j, Fraction(nu, h) + Fraction(mu, m))
        total += coef * inner
    return total


def _reciprocity_lhs(k: int, p: int, h: int, m: int) -> Fraction:
    return h * m**p * poly_dedekind_sum(k, p, h, m) + m * h**p * poly_dedekind_sum(k, p, m, h)


def theorem10_check(k: int, p: int, h: int, m: int) -> IdentityReport:
    _coprime(h, m)
    _positive(p=p)
    return IdentityReport(
        "theorem10", {"h": h, "m": m, "p": p, "k": k}, _reciprocity_lhs(k, p, h, m), theorem10_rhs(k, p, h, m)
    )


def corollary11_rhs(p: int, h: int, m: int) -> Fraction:
    """(mh)^(p-1) sum_{mu<m} sum_{nu<h} (mu h + m nu) Bbar_p(nu/h + mu/m)."""
    _positive(p=p, h=h, m=m)
    total = Fraction(0)
    for mu in range(m):
        for nu in range(h):
            w = mu * h + m * nu
            if w:
                total += w * bernoulli_function(p, Fraction(nu, h) + Fraction(mu, m))
    return rpow(m * h, p - 1) * total


def corollary11_check(p: int, h: int, m: int) -> IdentityReport:
    _coprime(h, m)
    _positive(p=p)
    return IdentityReport(
        "corollary11", {"h": h, "m": m, "p": p}, _reciprocity_lhs(1, p, h, m), corollary11_rhs(p, h, m)
    )


# ---------------------------------------------------------------- h = 1 closed forms

def proposition6_check(k: int, p: int, m: int) -> IdentityReport:
    _odd_at_least_3(p)
    _positive(m=m)
    lhs = m**p * poly_dedekind_sum(k, p, 1, m)
    bk = [poly_bernoulli_number(k, nu) for nu in range(p + 1)]
    head = sum(
        (Fraction(binomial(p, nu), p + 2 - nu) * bk[nu] for nu in range(p + 1)), Fraction(0)
    ) * m ** (p + 1)
    middle = Fraction(0)
    for i in range(1, p):
        for nu in range(p + 2 - i):
            c = binomial(p, nu) * binomial(p + 2 - nu, i)
            if c:
                middle += Fraction(c, p + 2 - nu) * bk[nu] * bernoulli_number(i) * m ** (p + 1 - i)
    rhs = head + middle + bernoulli_number(p + 1)
    return IdentityReport("proposition6", {"m": m, "p": p, "k": k}, lhs, rhs)


def theorem7_check(k: int, p: int, m: int) -> IdentityReport:
    _odd_at_least_3(p)
    _positive(m=m)
    lhs = (p + 1) * m**p * poly_dedekind_sum(k, p, 1, m)
    first = sum(
        (
            binomial(p + 1, i) * bernoulli_number(i) * m ** (p + 1 - i) * poly_bernoulli_at_one(k, p + 1 - i)
            for i in range(p + 2)
        ),
        Fraction(0),
    )
    second = sum(
        (
            binomial(p + 2, i) * (i - 1) * bernoulli_number(i) * m ** (p + 1 - i)
            * (poly_bernoulli_at_one(k, p + 2 - i) - poly_bernoulli_number(k, p + 2 - i))
            for i in range(p + 2)
        ),
        Fraction(0),
    )
    rhs = first + second / (p + 2)
    return IdentityReport("theorem7", {"m": m, "p": p, "k": k}, lhs, rhs)


def theorem8_check(k: int, p: int, h: int, m: int) -> IdentityReport:
    """Bernoulli-number convolution against a sum over mu of B_s^(k)(mu/m)
    times the ordinary polynomial B_{p+1-s} at the integer h - [h mu/m]."""
    _coprime(h, m)
    _odd_at_least_3(p)
    mh = m * h
    lhs = sum(
        (
            binomial(p + 1, s) * bernoulli_number(s) * poly_bernoulli_at_one(k, p + 1 - s) * mh ** (p + 1 - s)
            for s in range(p + 2)
        ),
        Fraction(0),
    )
    total = Fraction(0)
    for mu in range(m):
        arg = h - floor(Fraction(h * mu, m))
        for s in range(p + 2):
            total += (
                binomial(p + 1, s) * h**s
                * poly_bernoulli_poly(k, s)(Fraction(mu, m))
                * bernoulli_poly(p + 1 - s)(arg)
            )
    rhs = m**p * total
    return IdentityReport("theorem8", {"h": h, "m": m, "p": p, "k": k}, lhs, rhs)


# ---------------------------------------------------------------- tables

_KINDS = ("classical", "apostol", "poly")


def sum_table(
    kind: str,
    h: Iterable[int],
    m: Iterable[int],
    p: Iterable[int] = (1,),
    k: Iterable[int] = (1,),
) -> List[Tuple[SumParams, Fraction]]:
    """Evaluate a family of sums over the Cartesian product of the ranges,
    in lexicographic (h, m, p, k) order.

    ``classical`` ignores p and k; ``apostol`` ignores k.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown sum kind {kind!r}; expected one of {', '.join(_KINDS)}")
    hs, ms = sorted(set(h)), sorted(set(m))
    ps = sorted(set(p)) if kind != "classical" else [1]
    ks = sorted(set(k)) if kind == "poly" else [1]
    out = []
    for hh, mm, pp, kk in itertools.product(hs, ms, ps, ks):
        params = SumParams(hh, mm, pp, kk)
        if kind == "classical":
            value = dedekind_sum(hh, mm)
        elif kind == "apostol":
            value = apostol_sum(pp, hh, mm)
        else:
            value = poly_dedekind_sum(kk, pp, hh, mm)
        out.append((params, value))
    return out
