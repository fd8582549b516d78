# tests/test_riordan.py
from fractions import Fraction
from math import factorial

import pytest

from algebra.exact_core import ArgumentError, Polynomial, SeriesError, rising_poly
from algebra.series import TruncatedSeries
from arrays.lagrange import gep_closed_form
from arrays.riordan import (
    ArrayFlavor,
    SeriesPair,
    catalog_series,
    column,
    derivative_pair,
    diagonal_series,
    euler_poly,
    geometric_series,
    narayana_b_poly,
    narayana_poly,
    numerator,
    pascal_power,
    sheffer_row,
    square_row,
    type_b_gep,
    type_b_gnp,
)

x = Polynomial.x()


@pytest.mark.parametrize("n,coeffs", [
    (0, [1]),
    (1, [0, 1]),
    (2, [0, 1, 1]),
    (3, [0, 1, 4, 1]),
    (4, [0, 1, 11, 11, 1]),
])
def test_euler_polynomials(n, coeffs):
    assert euler_poly(n) == Polynomial(coeffs)


def test_euler_at_one_is_factorial():
    for n in range(1, 7):
        assert euler_poly(n)(1) == factorial(n)


def test_narayana():
    assert narayana_poly(0) == 1
    assert narayana_poly(3) == Polynomial([0, 1, 3, 1])
    assert narayana_b_poly(2) == Polynomial([1, 4, 1])
    with pytest.raises(ArgumentError):
        narayana_poly(-1)


def test_exponential_numerator_of_geometric_is_scaled_narayana():
    pair = SeriesPair.plain(geometric_series(12))
    for n in range(1, 5):
        result = numerator(pair, ArrayFlavor.EXPONENTIAL, n)
        assert result.residual_ok
        assert result.denominator_exponent == 2 * n + 1
        assert result.numerator == narayana_poly(n) * factorial(n + 1)


def test_numerator_at_zero_is_one(catalan):
    for flavor in ArrayFlavor:
        assert numerator(SeriesPair.plain(catalan), flavor, 0).numerator == 1


def test_pair_preconditions():
    with pytest.raises(SeriesError):
        SeriesPair.plain(TruncatedSeries([2, 1], 4))
    with pytest.raises(SeriesError):
        SeriesPair(TruncatedSeries([0, 1], 4), TruncatedSeries([1, 1], 4))


def test_numerator_needs_residual_window(catalan):
    with pytest.raises(SeriesError):
        numerator(SeriesPair.plain(catalan), ArrayFlavor.ORDINARY, 3, order=3)


def test_catalog():
    assert catalog_series("catalan", 5).coeffs == (1, 1, 2, 5, 14, 42)
    assert catalog_series("geom", 3, Fraction(2)).coeffs == (1, 2, 4, 8)
    assert catalog_series("genbinom", 4, Fraction(1)) == geometric_series(4)
    with pytest.raises(ArgumentError):
        catalog_series("nope", 3)
    with pytest.raises(ArgumentError):
        catalog_series("genbinom", 3)
    with pytest.raises(ArgumentError):
        catalog_series("onepx", 3, Fraction(1))


def test_exponential_column_scaling(onepx):
    # colonna 1 di (1+x, 1+x) esponenziale: k! [x^k] (1+x)^2
    col = column(SeriesPair(onepx, onepx), ArrayFlavor.EXPONENTIAL, 1)
    assert col.coeffs[:4] == (1, 2, 2, 0)


def test_diagonal_of_pascal_like_triangle(onepx):
    # (1, x(1+x)): diagonale 1 ha entrate m
    diagonal = diagonal_series(SeriesPair.plain(onepx), ArrayFlavor.ORDINARY, 1, 5)
    assert diagonal.coeffs == (0, 1, 2, 3, 4, 5)


def test_derivative_pair_sheffer_row(catalan):
    for n in range(5):
        assert sheffer_row(derivative_pair(catalan), n) == rising_poly(n).shift(n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_type_b_numerators_of_one_plus_x(onepx, n):
    assert type_b_gep(onepx, n).numerator == (2 - x) * x ** (n - 1)
    half = Fraction(factorial(2 * n), 2 * factorial(n))
    assert type_b_gnp(onepx, n).numerator == (1 + x) * x ** (n - 1) * half


def test_square_row_of_shifted_identity(onepx):
    assert square_row(SeriesPair.plain(onepx), 3) == x ** 3


def test_pascal_power():
    assert pascal_power(Fraction(1), 3).to_rows() == [[1, 0, 0], [1, 1, 0], [1, 2, 1]]
    assert pascal_power(Fraction(-1), 3).to_rows() == [[1, 0, 0], [-1, 1, 0], [1, -2, 1]]


@pytest.mark.parametrize("n", range(1, 6))
def test_geometric_numerator_matches_closed_form(n):
    result = numerator(SeriesPair.plain(geometric_series(16)), ArrayFlavor.ORDINARY, n)
    assert result.numerator == x
    assert gep_closed_form(1, n) == x
