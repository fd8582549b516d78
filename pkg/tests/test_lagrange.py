# tests/test_lagrange.py
from fractions import Fraction

import pytest
from hypothesis import given, settings

from arrays.lagrange import (
    beta_u_row,
    dual_basis_residual,
    extraction_law_holds,
    functional_equation_residuals,
    generalized_binomial,
    inverse_pair_check,
    lagrange_associate,
)
from arrays.riordan import catalan_series, exp_series, geometric_series, one_plus_x, sheffer_u_row
from tests.conftest import small_rationals


def test_catalan_is_associate_of_one_plus_x(onepx, catalan):
    assert lagrange_associate(onepx, 2, 1) == catalan
    assert generalized_binomial(2, 1, 12) == catalan


def test_beta_one_gives_geometric(onepx):
    assert lagrange_associate(onepx, 1, 1, 8) == geometric_series(8)


def test_beta_zero_is_plain_power():
    a = exp_series(8)
    assert lagrange_associate(a, 0, 2) == exp_series(8, Fraction(2))


@settings(max_examples=40)
@given(small_rationals(), small_rationals())
def test_generalized_binomial_matches_associate(beta, phi):
    assert generalized_binomial(beta, phi, 6) == lagrange_associate(one_plus_x(6), beta, phi)


@pytest.mark.parametrize("beta", [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)])
@pytest.mark.parametrize("phi", [Fraction(1), Fraction(2), Fraction(-1, 2)])
def test_extraction_law(beta, phi):
    a = catalan_series(6)
    for n in range(1, 7):
        assert extraction_law_holds(a, beta, phi, n)


@pytest.mark.parametrize("beta", [Fraction(2), Fraction(-1), Fraction(1, 2)])
def test_functional_equations(onepx, beta):
    first, second = functional_equation_residuals(onepx, beta, 8)
    assert all(c == 0 for c in first.coeffs)
    assert all(c == 0 for c in second.coeffs)


@pytest.mark.parametrize("a", [one_plus_x(8), catalan_series(8), exp_series(8)])
def test_inverse_pairs(a):
    assert inverse_pair_check(a, 1, 2, 8)
    assert inverse_pair_check(a, Fraction(1, 2), -1, 8)


@pytest.mark.parametrize("n", range(5))
def test_beta_u_row_at_zero_is_plain_row(catalan, n):
    assert beta_u_row(catalan, 0, n) == sheffer_u_row(catalan, n)


@pytest.mark.parametrize("phi", [Fraction(1), Fraction(-1, 2)])
def test_dual_basis_at_beta_zero(phi):
    residual = dual_basis_residual(one_plus_x(8), 0, phi, 8)
    assert all(c == 0 for c in residual.coeffs)
