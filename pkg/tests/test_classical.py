from fractions import Fraction as F
from math import factorial
import random

import pytest
from hypothesis import given, strategies as st

from polydedekind.classical import (
    bernoulli_function,
    bernoulli_numbers,
    bernoulli_numbers_via_series,
    bernoulli_poly,
    fractional_part,
    power_sum,
    sawtooth,
    stirling1_table,
    stirling_override,
    verify_distribution,
)
from polydedekind.exact import Polynomial, poly_compose_affine

from _oracles import akiyama_tanigawa, brute_power_sum, falling_factorial_coeffs, sawtooth_floor

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)


def test_bernoulli_values():
    b = bernoulli_numbers(8)
    assert b[0] == 1
    assert (b[1], b[2], b[4]) == (F(-1, 2), F(1, 6), F(-1, 30))
    assert b[3] == b[5] == b[7] == 0


def test_bernoulli_three_routes_agree():
    assert list(bernoulli_numbers(30)) == akiyama_tanigawa(30)
    assert bernoulli_numbers_via_series(30) == bernoulli_numbers(30)


def test_bernoulli_poly_examples():
    assert bernoulli_poly(0) == Polynomial([1])
    assert bernoulli_poly(1) == Polynomial([F(-1, 2), 1])
    assert bernoulli_poly(2) == Polynomial([F(1, 6), -1, 1])


@pytest.mark.parametrize("n", range(21))
def test_bernoulli_poly_telescopes(n):
    p = bernoulli_poly(n)
    assert p(1) - p(0) == (1 if n == 1 else 0)


@pytest.mark.parametrize("n", range(16))
def test_bernoulli_poly_reflection(n):
    p = bernoulli_poly(n)
    assert poly_compose_affine(p, -1, 1) == p * ((-1) ** n)


def test_fractional_part_and_sawtooth():
    assert fractional_part(F(7, 3)) == F(1, 3)
    assert fractional_part(F(-1, 3)) == F(2, 3)
    assert fractional_part(5) == 0
    assert sawtooth(0) == 0
    assert sawtooth(F(1, 4)) == F(-1, 4)
    assert sawtooth(F(7, 3)) == F(-1, 6)


@given(rationals)
def test_sawtooth_matches_floor_division(x):
    assert sawtooth(x) == sawtooth_floor(x)
    assert 0 <= fractional_part(x) < 1


def test_bernoulli_function_examples():
    assert bernoulli_function(1, F(1, 2)) == 0
    assert bernoulli_function(1, F(4, 3)) == F(-1, 6)
    assert bernoulli_function(2, F(-2, 3)) == F(-1, 18)


@given(st.integers(min_value=0, max_value=10), rationals)
def test_bernoulli_function_periodic(n, x):
    assert bernoulli_function(n, x + 1) == bernoulli_function(n, x)
    assert bernoulli_function(n, x - 3) == bernoulli_function(n, x)


def test_stirling_examples():
    t = stirling1_table(12)
    assert t[3, 2] == -3
    assert t[4, 2] == 11
    assert all(t[n, n] == 1 for n in range(13))
    assert t[0, 0] == 1 and all(t[n, 0] == 0 for n in range(1, 13))


def test_stirling_against_falling_factorial():
    t = stirling1_table(15)
    for n in range(16):
        assert list(t.row(n)) == falling_factorial_coeffs(n)


def test_stirling_row_sums_and_first_column():
    t = stirling1_table(15)
    for n in range(2, 16):
        assert sum(t.row(n)) == 0
    for n in range(1, 13):
        assert t[n, 1] == (-1) ** (n - 1) * factorial(n - 1)


def test_stirling_recurrence_holds_inside():
    t = stirling1_table(12)
    for n in range(12):
        for m in range(1, n + 2):
            assert t[n + 1, m] == t[n, m - 1] - n * t[n, m]


def test_stirling_override_is_scoped():
    clean = stirling1_table(5)
    with stirling_override({(3, 2): 99}):
        assert stirling1_table(5)[3, 2] == 99
    assert stirling1_table(5) == clean


def test_power_sum_examples():
    assert power_sum(2, 3) == 5
    assert power_sum(0, 7) == 7
    assert power_sum(5, 1) == 0


def test_power_sum_brute_force():
    for j in range(9):
        for n in range(1, 51):
            assert power_sum(j, n) == brute_power_sum(j, n)


def test_distribution_examples():
    # n = 1, d = 2 as polynomials in x
    b1 = bernoulli_poly(1)
    halves = poly_compose_affine(b1, F(1, 2), 0) + poly_compose_affine(b1, F(1, 2), F(1, 2))
    assert halves == b1
    rep = verify_distribution(2, 3, F(1, 2))
    assert rep.lhs == rep.rhs == F(-1, 36)
    assert rep.holds
    for n in range(6):
        assert verify_distribution(n, 1, F(-7, 5)).holds


def test_distribution_polynomial_identity():
    for n in range(11):
        for d in range(1, 7):
            assert verify_distribution(n, d, 0).details["a_poly"]


def test_distribution_random_points():
    rng = random.Random(1234)
    for _ in range(100):
        x = F(rng.randint(-500, 500), rng.randint(1, 50))
        for n in range(9):
            for d in range(1, 6):
                rep = verify_distribution(n, d, x)
                assert rep.holds, (n, d, x, rep)
