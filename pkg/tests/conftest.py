# tests/conftest.py
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from arrays.riordan import catalan_series, one_plus_x  # noqa: E402
from config.settings import CheckParams  # noqa: E402

ORDER = 12


def small_rationals(max_numerator: int = 4, max_denominator: int = 3):
    """Razionali piccoli per i test property-based"""
    return st.builds(
        Fraction,
        st.integers(-max_numerator, max_numerator),
        st.integers(1, max_denominator),
    )


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("RIORDAN_MAX_N", "RIORDAN_BETA_GRID", "RIORDAN_GUARD",
                 "RIORDAN_MAX_WORKERS", "RIORDAN_SERIES_ORDER"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def catalan():
    return catalan_series(ORDER)


@pytest.fixture
def onepx():
    return one_plus_x(ORDER)


@pytest.fixture
def small_params():
    return CheckParams(
        max_n=3,
        matrix_max_n=3,
        beta_grid=(Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)),
        guard=4,
        series_order=8,
    )
