# tests/test_series.py
from fractions import Fraction

import pytest
from hypothesis import given, settings

from algebra.exact_core import Polynomial, SeriesError
from algebra.series import (
    TruncatedSeries,
    default_order,
    lagrange_reversion_coefficient,
    sheffer_rows,
)
from arrays.riordan import exp_series
from tests.conftest import small_rationals


def test_default_order():
    assert default_order(3, 4) == 10
    assert default_order(0) == 4


def test_geometric_and_inverse():
    geom = TruncatedSeries.geometric(1, 6)
    assert geom.coeffs == tuple(Fraction(1) for _ in range(7))
    assert TruncatedSeries([1, -1], 6).inverse() == geom


def test_coefficient_beyond_order_raises():
    with pytest.raises(SeriesError):
        TruncatedSeries([1, 2], 3)[4]


def test_order_bookkeeping():
    f = TruncatedSeries([1, 2, 3], 5)
    assert f.derivative().order == 4
    assert f.mul_x(2).order == 7
    assert f.mul_x().div_x() == f


def test_div_x_requires_zero_head():
    with pytest.raises(SeriesError):
        TruncatedSeries([1, 1], 4).div_x()


def test_reversion_of_x_minus_x_squared(catalan):
    g = TruncatedSeries([0, 1, -1], 8)
    h = g.reversion()
    assert h.coeffs[:7] == (0, 1, 1, 2, 5, 14, 42)
    assert g.compose(h).agrees_with(TruncatedSeries.x(8))
    assert h.div_x().agrees_with(catalan)


def test_lagrange_coefficient_matches_reversion():
    g = TruncatedSeries([0, 1, -1], 8)
    h = g.reversion()
    for n in range(1, 9):
        assert lagrange_reversion_coefficient(g, n) == h[n]


def test_compose_needs_zero_constant():
    with pytest.raises(SeriesError):
        TruncatedSeries([1, 1], 3).compose(TruncatedSeries([1, 1], 3))


def test_log_exp_round_trip(catalan):
    assert catalan.log().exp() == catalan


def test_log_requires_unit_head():
    with pytest.raises(SeriesError):
        TruncatedSeries([2, 1], 3).log()


def test_rational_power():
    square = TruncatedSeries([1, 2, 1], 6)
    assert square.pow_rational(Fraction(1, 2)) == TruncatedSeries([1, 1], 6)
    assert square ** Fraction(1, 2) == TruncatedSeries([1, 1], 6)
    assert TruncatedSeries([1, 1], 6) ** -1 == TruncatedSeries([1, -1, 1, -1, 1, -1, 1], 6)


@settings(max_examples=30)
@given(small_rationals(), small_rationals())
def test_power_law(p, q):
    f = exp_series(6) * TruncatedSeries([1, 1], 6)
    assert (f ** p) * (f ** q) == f ** (p + q)


def test_sheffer_rows_of_exponential():
    rows = sheffer_rows(TruncatedSeries.constant(1, 4), TruncatedSeries.x(4), 4)
    assert rows == [Polynomial.x() ** k for k in range(5)]


def test_dilate():
    assert TruncatedSeries.geometric(1, 4).dilate(2) == TruncatedSeries.geometric(2, 4)
