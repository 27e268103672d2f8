from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from polydedekind.classical import bernoulli_numbers, stirling1_table
from polydedekind.series import (
    SeriesError,
    TruncSeries,
    expm1_series,
    identity_series,
    log1p_series,
    one_series,
    polyexp_series,
    series_compose,
    series_inv,
    series_mul,
)

from _oracles import falling_factorial_coeffs


def test_mul_examples():
    assert series_mul(TruncSeries([1, 1, 0, 0]), TruncSeries([1, -1, 0, 0])) == TruncSeries([1, 0, -1, 0])
    a = TruncSeries([F(2, 3), 5, 0, -1])
    assert series_mul(a, one_series(3)) == a
    lg = log1p_series(3)
    assert series_mul(lg, lg) == TruncSeries([0, 0, 1, -1])


def test_mul_rejects_order_mismatch():
    with pytest.raises(SeriesError):
        series_mul(one_series(2), one_series(3))


def test_inv_examples():
    assert series_inv(one_series(4)) == one_series(4)
    assert series_inv(TruncSeries([1, 1, 0, 0])) == TruncSeries([1, -1, 1, -1])
    quotient = expm1_series(5).shift_down()
    assert series_inv(quotient) == TruncSeries([1, F(-1, 2), F(1, 12), 0, F(-1, 720)])


def test_inv_cross_checks_bernoulli():
    inv = series_inv(expm1_series(13).shift_down())
    assert inv.egf_coefficients() == list(bernoulli_numbers(12))


def test_inv_rejects_zero_constant():
    with pytest.raises(SeriesError):
        series_inv(TruncSeries([0, 1, 2]))


def test_log1p_and_expm1():
    assert log1p_series(3) == TruncSeries([0, 1, F(-1, 2), F(1, 3)])
    assert log1p_series(0) == TruncSeries([0])
    assert log1p_series(1) == TruncSeries([0, 1])
    assert expm1_series(3) == TruncSeries([0, 1, F(1, 2), F(1, 6)])
    assert expm1_series(0) == TruncSeries([0])


def test_polyexp_examples():
    assert polyexp_series(1, 4) == TruncSeries([0, 1, F(1, 2), F(1, 6), F(1, 24)])
    assert polyexp_series(2, 3) == TruncSeries([0, 1, F(1, 4), F(1, 18)])
    assert polyexp_series(0, 2) == TruncSeries([0, 1, 1])
    # n^3 / (n-1)! for k = -3
    assert polyexp_series(-3, 3) == TruncSeries([0, 1, 8, F(27, 2)])


@pytest.mark.parametrize("n", range(13))
def test_polyexp_index_one_is_expm1(n):
    assert polyexp_series(1, n) == expm1_series(n)


def test_compose_examples():
    n = 5
    assert series_compose(expm1_series(n), log1p_series(n)) == identity_series(n)
    f = TruncSeries([3, F(1, 2), -7, 0, 2])
    assert series_compose(f, identity_series(4)) == f
    with pytest.raises(SeriesError):
        series_compose(f, TruncSeries([1, 1, 0, 0, 0]))


@pytest.mark.parametrize("n", range(1, 13))
def test_log_exp_two_sided_inverse(n):
    assert series_compose(log1p_series(n), expm1_series(n)) == identity_series(n)
    assert series_compose(expm1_series(n), log1p_series(n)) == identity_series(n)


@pytest.mark.parametrize("k", range(-3, 4))
def test_polyexp_of_log_against_falling_factorials(k):
    # n! [t^n] Ei_k(log(1+t)) == sum_m S_1(n, m) m^(1-k), S_1 from x(x-1)...(x-n+1)
    order = 10
    composed = series_compose(polyexp_series(k, order), log1p_series(order))
    for n in range(1, order + 1):
        s1 = falling_factorial_coeffs(n)
        expected = sum((s1[m] * F(m) ** (1 - k) for m in range(1, n + 1)), F(0))
        assert composed[n] * factorial(n) == expected
        # and against the package's own Stirling table
        table = stirling1_table(n)
        assert expected == sum((table[n, m] * F(m) ** (1 - k) for m in range(1, n + 1)), F(0))


invertible = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=13, max_size=13
).filter(lambda cs: cs[0] != 0)


@given(invertible, st.integers(min_value=0, max_value=12))
def test_inverse_property(coeffs, order):
    a = TruncSeries(coeffs[: order + 1])
    assert series_mul(a, series_inv(a)) == one_series(order)


def test_order_is_kept():
    s = TruncSeries([0, 0, 0])
    assert s.order == 2 and len(s.coeffs) == 3
