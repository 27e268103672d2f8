from fractions import Fraction as F

import pytest

from polydedekind.classical import bernoulli_function, bernoulli_numbers, bernoulli_poly
from polydedekind.exact import Polynomial, poly_derivative
from polydedekind.polybernoulli import (
    corollary4_check,
    poly_bernoulli_function,
    poly_bernoulli_numbers,
    poly_bernoulli_poly,
    theorem2_check,
    theorem3_check,
    theorem5_check,
    theorem9_expand,
)
from polydedekind.report import PreconditionError

KS = range(-2, 4)

# n! [t^n] Ei_k(log(1+t)) / (e^t - 1), expanded independently with sympy
SYMPY_NUMBERS = {
    -2: ["1", "3", "-5/3", "-19/4", "613/30", "-285/4"],
    0: ["1", "0", "-2/3", "5/4", "-77/30", "31/4"],
    2: ["1", "-3/4", "25/36", "-53/48", "5477/1800", "-8407/720"],
    3: ["1", "-7/8", "215/216", "-1055/576", "573289/108000", "-903109/43200"],
}


@pytest.mark.parametrize("k", sorted(SYMPY_NUMBERS))
def test_numbers_against_frozen_sympy_expansion(k):
    assert poly_bernoulli_numbers(k, 5) == [F(v) for v in SYMPY_NUMBERS[k]]


@pytest.mark.parametrize("k", range(-6, 7))
def test_first_numbers(k):
    nums = poly_bernoulli_numbers(k, 1)
    assert nums[0] == 1
    assert nums[1] == -1 + F(1, 2) ** k


def test_index_one_is_classical():
    assert poly_bernoulli_numbers(1, 12) == list(bernoulli_numbers(12))
    for n in range(13):
        assert poly_bernoulli_poly(1, n) == bernoulli_poly(n)


def test_poly_examples():
    assert poly_bernoulli_poly(5, 0) == Polynomial([1])
    assert poly_bernoulli_poly(2, 1) == Polynomial([F(-3, 4), 1])
    assert poly_bernoulli_poly(1, 2) == Polynomial([F(1, 6), -1, 1])


@pytest.mark.parametrize("k", KS)
def test_monic_of_degree_n(k):
    for n in range(9):
        p = poly_bernoulli_poly(k, n)
        assert p.degree == n and p.coeffs[-1] == 1


def test_function_examples():
    assert poly_bernoulli_function(2, 1, F(7, 4)) == 0
    for x in (F(-5, 3), F(0), F(9, 7)):
        assert poly_bernoulli_function(-1, 0, x) == 1
        for n in range(6):
            assert poly_bernoulli_function(1, n, x) == bernoulli_function(n, x)


@pytest.mark.parametrize("k", range(-3, 4))
def test_derivative_lowers_index(k):
    for n in range(1, 11):
        assert poly_derivative(poly_bernoulli_poly(k, n)) == poly_bernoulli_poly(k, n - 1) * n


def test_cache_prefix_consistency():
    long = poly_bernoulli_numbers(-3, 14)
    assert poly_bernoulli_numbers(-3, 4) == long[:5]


def test_theorem2_examples():
    for k in KS:
        rep = theorem2_check(k, 1)
        assert rep.lhs == rep.rhs == 1
    rep = theorem2_check(1, 2)
    assert rep.lhs == rep.rhs == 0
    rep = theorem2_check(2, 2)
    assert rep.rhs == F(-1, 2) and rep.holds
    with pytest.raises(PreconditionError):
        theorem2_check(1, 0)


def test_theorem3_examples():
    assert theorem3_check(1, 1, 1).holds
    for p in range(1, 6):
        rep = theorem3_check(2, p + 2, p)
        assert rep.holds and rep.lhs == F(1, p + 2)
    assert theorem3_check(2, 2, 3).holds
    rep = theorem3_check(0, 9, 3)
    assert rep.lhs == rep.rhs == 0


def test_corollary4_examples():
    # s = 1: the extra binomial vanishes, so the right side equals the theorem-3 one
    assert corollary4_check(1, 1, 2).rhs == theorem3_check(1, 1, 2).rhs
    assert corollary4_check(1, 1, 2).holds
    assert corollary4_check(1, 2, 3).holds
    assert corollary4_check(-1, 3, 4).holds
    assert corollary4_check(3, 7, 4).lhs == 0


def test_theorem5_examples():
    rep = theorem5_check(1, 1)
    assert rep.lhs == rep.rhs == F(1, 12)
    assert rep.details["integral"]
    assert theorem5_check(2, 2).holds
    assert theorem5_check(0, 3).holds


def test_theorem9_examples():
    for n in range(9):
        assert theorem9_expand(1, n, 1) == bernoulli_poly(n)
    assert theorem9_expand(2, 3, 2) == poly_bernoulli_poly(2, 3)
    for d in range(1, 5):
        assert theorem9_expand(-2, 0, d) == Polynomial([1])


def test_index_cap(monkeypatch):
    monkeypatch.setenv("POLYDED_MAX_K", "4")
    with pytest.raises(PreconditionError):
        poly_bernoulli_numbers(5, 3)
    assert poly_bernoulli_numbers(-4, 1)[0] == 1
