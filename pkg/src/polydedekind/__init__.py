"""Exact type 2 poly-Bernoulli polynomials and poly-Dedekind sums.

All arithmetic is over :class:`fractions.Fraction`; identities are checked by
exact equality.
"""
from .classical import (
    bernoulli_function,
    bernoulli_numbers,
    bernoulli_poly,
    fractional_part,
    power_sum,
    sawtooth,
    stirling1_table,
    verify_distribution,
)
from .dedekind import (
    apostol_reciprocity_check,
    apostol_sum,
    classical_reciprocity_check,
    corollary11_check,
    dedekind_sum,
    poly_dedekind_sum,
    proposition6_check,
    sum_table,
    theorem7_check,
    theorem8_check,
    theorem10_check,
    theorem10_rhs,
)
from .exact import Polynomial, binomial, poly_compose_affine, poly_derivative, poly_eval
from .polybernoulli import (
    corollary4_check,
    poly_bernoulli_function,
    poly_bernoulli_numbers,
    poly_bernoulli_poly,
    theorem2_check,
    theorem3_check,
    theorem5_check,
    theorem9_expand,
)
from .report import IdentityReport, PreconditionError, SumParams
from .series import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "bernoulli_function",
    "bernoulli_numbers",
    "bernoulli_poly",
    "fractional_part",
    "power_sum",
    "sawtooth",
    "stirling1_table",
    "verify_distribution",
    "apostol_reciprocity_check",
    "apostol_sum",
    "classical_reciprocity_check",
    "corollary11_check",
    "dedekind_sum",
    "poly_dedekind_sum",
    "proposition6_check",
    "sum_table",
    "theorem7_check",
    "theorem8_check",
    "theorem10_check",
    "theorem10_rhs",
    "corollary4_check",
    "poly_bernoulli_function",
    "poly_bernoulli_numbers",
    "poly_bernoulli_poly",
    "theorem2_check",
    "theorem3_check",
    "theorem5_check",
    "theorem9_expand",
    "Polynomial",
    "binomial",
    "poly_compose_affine",
    "poly_derivative",
    "poly_eval",
    "IdentityReport",
    "PreconditionError",
    "SumParams",
    "TruncSeries",
]
