# tests/test_series_spec.py
from fractions import Fraction

import pytest

from algebra.exact_core import Polynomial, SeriesError
from algebra.series import TruncatedSeries
from arrays.riordan import catalan_series, exp_series, genbinom_series, geometric_series
from utils.series_spec import (
    Factor,
    LagrangeSeries,
    NamedSeries,
    RationalSeries,
    MAX_EXPONENT,
    SeriesSpecError,
    parse_series_spec,
    resolve_series,
)


class TestParse:
    def test_named(self):
        assert parse_series_spec("catalan") == NamedSeries("catalan")
        assert parse_series_spec("exp(-1/2)") == NamedSeries("exp", Fraction(-1, 2))

    def test_lagrange(self):
        spec = parse_series_spec("lagrange(onepx, 2)")
        assert isinstance(spec, LagrangeSeries)
        assert spec.inner == NamedSeries("onepx")
        assert spec.beta == 2

    def test_rational_function(self):
        spec = parse_series_spec("1/(1-x)")
        assert spec == RationalSeries((Factor(Polynomial.one()),), (Factor(Polynomial([1, -1])),))

    def test_powers(self):
        spec = parse_series_spec("(1+x)^2")
        assert spec == RationalSeries((Factor(Polynomial([1, 1]), 2),))

    @pytest.mark.parametrize("text", ["catalan", "exp(-1/2)", "lagrange(onepx, 2)", "1/(1 - x)",
                                      "(1 + x)^2", "1 + 2x^3", "(1 + x)(1 - x)/(1 - 2x)^2"])
    def test_render_is_reparseable(self, text):
        spec = parse_series_spec(text)
        assert parse_series_spec(spec.render()) == spec


class TestErrors:
    def test_unknown_name_has_position(self):
        with pytest.raises(SeriesSpecError) as info:
            parse_series_spec("foo")
        assert info.value.position == 0
        assert info.value.expected

    @pytest.mark.parametrize("text", ["genbinom", "onepx(2)", "1/0", "catalan +", "lagrange(onepx)", ""])
    def test_rejected(self, text):
        with pytest.raises(SeriesSpecError):
            parse_series_spec(text)

    def test_huge_exponent_is_rejected_before_expansion(self):
        with pytest.raises(SeriesSpecError) as info:
            parse_series_spec("x^300000000")
        assert info.value.position == 2
        top = Factor(Polynomial.monomial(MAX_EXPONENT))
        assert parse_series_spec(f"x^{MAX_EXPONENT}") == RationalSeries((top,))
        with pytest.raises(SeriesSpecError):
            parse_series_spec(f"(1-x)^{MAX_EXPONENT + 1}")

    def test_unclosed_parenthesis_points_at_the_end(self):
        with pytest.raises(SeriesSpecError) as info:
            parse_series_spec("1/(1-x")
        assert info.value.position == 6
        assert any(")" in token for token in info.value.expected)

    def test_vanishing_denominator(self):
        with pytest.raises(SeriesError):
            resolve_series("1/x", 4)

    def test_lagrange_needs_unit_head(self):
        with pytest.raises(SeriesError):
            resolve_series("lagrange(2 + x, 1)", 4)


class TestResolve:
    def test_catalog(self):
        assert resolve_series("catalan", 6) == catalan_series(6)
        assert resolve_series("exp(2)", 5) == exp_series(5, Fraction(2))
        assert resolve_series("genbinom(1/2)", 5) == genbinom_series(5, Fraction(1, 2))

    def test_rational(self):
        assert resolve_series("1/(1-x)", 6) == geometric_series(6)
        assert resolve_series("(1+x)^2", 4) == TruncatedSeries([1, 2, 1], 4)
        assert resolve_series("1", 3) == TruncatedSeries.constant(1, 3)

    def test_lagrange(self):
        assert resolve_series("lagrange(onepx, 2)", 8) == catalan_series(8)
        assert resolve_series("lagrange(1+x, 1)", 6) == geometric_series(6)
