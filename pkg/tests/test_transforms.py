# tests/test_transforms.py
from fractions import Fraction

import pytest

from algebra.exact_core import DegreeError, OperatorError, Polynomial
from arrays.operator import FiniteOperator
from arrays.riordan import pascal_power
from arrays.transforms import (
    MatrixName,
    MatrixTag,
    build,
    closed_form_column,
    factorized,
    inverse_name,
    multiplication,
    parse_tag,
    reversal,
    shift_operator,
)

x = Polynomial.x()


class TestNames:
    def test_tilde_aliases(self):
        assert parse_tag("Stilde") is MatrixTag.ST
        assert parse_tag("St") is MatrixTag.ST
        assert parse_tag("Utildeinv") is MatrixTag.UTINV

    def test_unknown_name(self):
        with pytest.raises(OperatorError):
            parse_tag("Q")

    def test_validation(self):
        with pytest.raises(OperatorError):
            MatrixName(MatrixTag.ST, 0)
        with pytest.raises(OperatorError):
            MatrixName(MatrixTag.U, 2, Fraction(1))
        assert MatrixName(MatrixTag.U, 0).dim == 1

    def test_beta_defaults_and_labels(self):
        assert MatrixName(MatrixTag.G, 3).beta == 1
        assert MatrixName(MatrixTag.G, 3, Fraction(-1)).label() == "G_3^-1"
        assert MatrixName(MatrixTag.ST, 2).label() == "St_2"
        assert MatrixName(MatrixTag.ST, 2).dim == 2
        assert MatrixName(MatrixTag.S, 2).dim == 3

    def test_inverse_names(self):
        assert inverse_name(MatrixName(MatrixTag.U, 3)) == MatrixName(MatrixTag.UINV, 3)
        assert inverse_name(MatrixName(MatrixTag.G, 3, Fraction(2))).beta == -2
        assert inverse_name(MatrixName(MatrixTag.J, 3)) == MatrixName(MatrixTag.J, 3)


class TestElementary:
    def test_multiplication(self):
        op = multiplication(Polynomial([1, 1]), 3, 2)
        assert op == FiniteOperator([[1, 0], [1, 1], [0, 1]])

    def test_shift(self):
        assert shift_operator(1, 3).apply(x ** 2) == (x + 1) ** 2
        assert shift_operator(Fraction(1, 2), 4) @ shift_operator(Fraction(-1, 2), 4) == FiniteOperator.identity(4)

    @pytest.mark.parametrize("beta", [Fraction(1), Fraction(-2), Fraction(1, 3)])
    def test_shift_is_transposed_pascal(self, beta):
        assert factorized(MatrixName(MatrixTag.E, 3, beta)) == build(MatrixName(MatrixTag.E, 3, beta))
        assert build(MatrixName(MatrixTag.E, 3, beta)) == pascal_power(beta, 4).transpose()

    def test_reversal_is_involution(self):
        assert (reversal(4) @ reversal(4)).is_identity()
        assert build(MatrixName(MatrixTag.J, 3)) == reversal(4)

    def test_apply_rejects_large_degree(self):
        with pytest.raises(DegreeError):
            FiniteOperator.identity(2).apply(x ** 2)


class TestFamilies:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_u_inverse_pairs(self, n):
        assert (build(MatrixName(MatrixTag.U, n)) @ build(MatrixName(MatrixTag.UINV, n))).is_identity()
        assert (build(MatrixName(MatrixTag.UT, n)) @ build(MatrixName(MatrixTag.UTINV, n))).is_identity()

    @pytest.mark.parametrize("n", range(1, 5))
    def test_ut_reflection_conjugate(self, n):
        ut, ut_inv = build(MatrixName(MatrixTag.UT, n)), build(MatrixName(MatrixTag.UTINV, n))
        reflected = ut @ FiniteOperator.diagonal([(-1) ** p for p in range(n)]) @ ut_inv
        assert reflected == reversal(n) * (-1) ** (n - 1)

    @pytest.mark.parametrize("tag", [MatrixTag.G, MatrixTag.A, MatrixTag.H, MatrixTag.T])
    def test_beta_zero_is_identity(self, tag):
        assert build(MatrixName(tag, 3, Fraction(0))).is_identity()

    @pytest.mark.parametrize("n", range(1, 5))
    def test_g_closed_form_at_beta_zero(self, n):
        name = MatrixName(MatrixTag.G, n, Fraction(0))
        for p in range(n + 1):
            assert closed_form_column(name, p) == x ** p

    def test_closed_form_missing(self):
        with pytest.raises(OperatorError):
            closed_form_column(MatrixName(MatrixTag.U, 2), 0)

    def test_stilde_two(self):
        assert build(MatrixName(MatrixTag.ST, 2)) == FiniteOperator([[6, 0], [6, 12]])
