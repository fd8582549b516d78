# tests/test_exact_core.py
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.exact_core import (
    ArgumentError,
    DegreeError,
    Polynomial,
    StirlingKind,
    as_rational,
    falling_poly,
    format_rational,
    poly_reverse,
    rat_binomial,
    rising_poly,
    stirling,
    t_poly,
)
from tests.conftest import small_rationals

x = Polynomial.x()


class TestRationals:
    @pytest.mark.parametrize("text,expected", [
        ("3/4", Fraction(3, 4)),
        (" -2 ", Fraction(-2)),
        ("6/4", Fraction(3, 2)),
        ("0", Fraction(0)),
    ])
    def test_parse(self, text, expected):
        assert as_rational(text) == expected

    @pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "", "--1"])
    def test_malformed(self, bad):
        with pytest.raises(ArgumentError):
            as_rational(bad)

    def test_bool_is_not_rational(self):
        with pytest.raises(ArgumentError):
            as_rational(True)

    def test_format(self):
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(0)) == "0"


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 0, 0]).degree == 0
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial.zero().degree < 0

    def test_out_of_range_coefficient_is_zero(self):
        assert Polynomial([1, 2])[5] == 0

    @pytest.mark.parametrize("coeffs,text", [
        ([0, 1, 11, 11, 1], "x + 11x^2 + 11x^3 + x^4"),
        ([0, Fraction(1, 2)], "1/2x"),
        ([1, -1], "1 - x"),
        ([-1, 0, 2], "-1 + 2x^2"),
        ([], "0"),
    ])
    def test_render(self, coeffs, text):
        assert Polynomial(coeffs).render() == text

    def test_arithmetic(self):
        assert (1 + x) ** 2 == Polynomial([1, 2, 1])
        assert (1 + x) * (1 - x) == Polynomial([1, 0, -1])
        assert Polynomial([2, 4]) / 2 == Polynomial([1, 2])
        assert Polynomial([3]) == 3

    def test_shift_and_derivative(self):
        assert (x ** 2).shift(1) == Polynomial([1, 2, 1])
        assert Polynomial([1, 2, 3]).derivative() == Polynomial([2, 6])

    def test_div_x(self):
        assert Polynomial([0, 0, 5]).div_x(2) == 5
        with pytest.raises(DegreeError):
            Polynomial([1, 1]).div_x()

    def test_padded_rejects_overflow(self):
        with pytest.raises(DegreeError):
            Polynomial([1, 1, 1]).padded(2)

    @settings(max_examples=50)
    @given(st.lists(small_rationals(), max_size=4), st.lists(small_rationals(), max_size=4),
           small_rationals())
    def test_evaluation_is_multiplicative(self, a, b, point):
        p, q = Polynomial(a), Polynomial(b)
        assert (p * q)(point) == p(point) * q(point)
        assert p * q == q * p


class TestCombinatorics:
    def test_factorial_polynomials(self):
        assert rising_poly(3) == Polynomial([0, 2, 3, 1])
        assert falling_poly(3) == Polynomial([0, 2, -3, 1])
        assert rising_poly(0) == 1

    def test_rat_binomial(self):
        assert rat_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
        assert rat_binomial(-1, 3) == -1
        assert rat_binomial(5, -1) == 0
        assert rat_binomial(5, 2) == 10

    def test_stirling_values(self):
        assert stirling(StirlingKind.FIRST, 3, 2) == -3
        assert stirling("first", 4, 2) == 11
        assert stirling(StirlingKind.SECOND, 4, 2) == 7
        assert stirling(StirlingKind.SECOND, 5, 3) == 25
        with pytest.raises(ArgumentError):
            stirling(StirlingKind.SECOND, 2, 3)

    @pytest.mark.parametrize("n", range(7))
    def test_stirling_inverse_matrices(self, n):
        for m in range(n + 1):
            total = sum(stirling(StirlingKind.SECOND, n, k) * stirling(StirlingKind.FIRST, k, m)
                        for k in range(m, n + 1))
            assert total == (1 if m == n else 0)

    def test_poly_reverse(self):
        assert poly_reverse(Polynomial([1, 2]), 3) == Polynomial([0, 0, 2, 1])
        with pytest.raises(DegreeError):
            poly_reverse(Polynomial([1, 2, 3]), 1)

    def test_t_poly(self):
        assert t_poly(1, 1, 1) == Polynomial([1, 1])
        assert t_poly(2, 0, 2) == x ** 2
