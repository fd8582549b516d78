# verify/matrix_checks.py
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, Optional

from algebra.exact_core import Polynomial, StirlingKind, rat_binomial, stirling
from arrays.operator import FiniteOperator
from arrays.transforms import (
    BETA_TAGS,
    INVERSE_TAGS,
    TILDE_TAGS,
    MatrixName,
    MatrixTag,
    build,
    closed_form_column,
    conjugated_by_s,
    corner_columns,
    factorized,
    inverse_name,
    reduce_conjugation,
    reduced_name,
    reflection,
    shift_operator,
    shift_relations_check,
)
from verify.base_check import BaseVerifier, CaseLog, CheckBody
from verify.displayed import DISPLAYED_MATRICES, DISPLAYED_TRIANGLES

logger = logging.getLogger(__name__)


def _op(tag: MatrixTag, n: int, beta: Optional[Fraction] = None) -> FiniteOperator:
    return build(MatrixName(tag, n, beta))


def _signed(sign_exponent: int, operator: FiniteOperator) -> FiniteOperator:
    return operator * (-1) ** sign_exponent


class MatrixVerifier(BaseVerifier):
    """Identita' tra operatori finiti, verificate entrata per entrata"""

    def checks(self) -> Dict[str, CheckBody]:
        return {
            "T1": self._check_ut_reflection,
            "T3": self._check_ut_degree_reduction,
            "T4": lambda log: self._check_factorized(log, MatrixTag.A, beta=True),
            "T6": self._check_ft_reflection,
            "T7": lambda log: self._check_factorized(log, MatrixTag.ST),
            "T9": self._check_u_reflection,
            "T10": self._check_u_degree_reduction,
            "T11": self._check_f_reflection,
            "T12": lambda log: self._check_factorized(log, MatrixTag.S),
            "T13": lambda log: self._check_closed_columns(log, MatrixTag.S),
            "T14": lambda log: self._check_closed_columns(log, MatrixTag.SINV),
            "T15": self._check_beta_inversion_g_a,
            "T16": lambda log: self._check_factorized(log, MatrixTag.G, beta=True),
            "T17": lambda log: self._check_closed_columns(log, MatrixTag.G),
            "T18": lambda log: self._check_beta_inversion(log, MatrixTag.H),
            "T19": lambda log: self._check_conjugate_family(log, MatrixTag.H),
            "T20": lambda log: self._check_beta_inversion(log, MatrixTag.T),
            "T21": lambda log: self._check_conjugate_family(log, MatrixTag.T),
            "R1": self._check_shift_relations,
            "STIRLING": self._check_stirling,
            "COLSUM_A": self._check_column_sums,
            "GROUPLAW_G": self._check_group_law,
            "REDUCE_A": lambda log: self._check_reduction(log, MatrixTag.A),
            "REDUCE_G": lambda log: self._check_reduction(log, MatrixTag.G),
            "DISPLAYED": self._check_displayed,
        }

    # --- griglie di parametri --------------------------------------------
    def _sizes(self, start: int = 1) -> Iterator[int]:
        return iter(range(start, self.params.matrix_max_n + 1))

    def _names(self, tag: MatrixTag, beta: bool = False) -> Iterator[MatrixName]:
        for n in self._sizes():
            if beta:
                for b in self.params.beta_grid:
                    yield MatrixName(tag, n, b)
            else:
                yield MatrixName(tag, n)

    # --- coniugio della riflessione ----------------------------------------
    def _check_ut_reflection(self, log: CaseLog):
        for n in self._sizes():
            left = _op(MatrixTag.UT, n) @ reflection(n) @ _op(MatrixTag.UTINV, n)
            log.compare(left, _signed(n - 1, _op(MatrixTag.JT, n)), n=n)

    def _check_ft_reflection(self, log: CaseLog):
        for n in self._sizes():
            left = _op(MatrixTag.FT, n) @ shift_operator(n, n) @ reflection(n) @ _op(MatrixTag.FTINV, n)
            log.compare(left, _signed(n - 1, _op(MatrixTag.JT, n)), n=n)

    def _check_u_reflection(self, log: CaseLog):
        for n in self._sizes(0):
            left = _op(MatrixTag.U, n) @ shift_operator(1, n + 1) @ reflection(n + 1) @ _op(MatrixTag.UINV, n)
            log.compare(left, _signed(n, _op(MatrixTag.J, n)), n=n)

    def _check_f_reflection(self, log: CaseLog):
        for n in self._sizes():
            dim = n + 1
            target = _signed(n, _op(MatrixTag.J, n))
            left = _op(MatrixTag.F, n) @ shift_operator(n + 1, dim) @ reflection(dim) @ _op(MatrixTag.FINV, n)
            log.compare(left, target, n=n, family="F")
            left = _op(MatrixTag.BF, n) @ shift_operator(n - 1, dim) @ reflection(dim) @ _op(MatrixTag.BFINV, n)
            log.compare(left, target, n=n, family="BF")

    # --- riduzione di grado ------------------------------------------------
    def _check_ut_degree_reduction(self, log: CaseLog):
        for n in self._sizes(2):
            for m in range(1, n):
                factor = Polynomial([1, -1]) ** m * Fraction(factorial(n - m), factorial(n))
                for k in range(n - m):
                    mono = Polynomial.monomial(k)
                    right = factor * _op(MatrixTag.UT, n - m).apply(mono)
                    log.compare(_op(MatrixTag.UT, n).apply(mono), right, n=n, m=m, k=k)

    def _check_u_degree_reduction(self, log: CaseLog):
        for n in self._sizes():
            for m in range(1, n + 1):
                factor = Polynomial([1, -1]) ** m * Fraction(factorial(n - m), factorial(n))
                for k in range(n - m + 1):
                    mono = Polynomial.monomial(k)
                    right = factor * _op(MatrixTag.U, n - m).apply(mono)
                    log.compare(_op(MatrixTag.U, n).apply(mono), right, n=n, m=m, k=k)

    # --- seconde costruzioni ----------------------------------------------
    def _check_factorized(self, log: CaseLog, tag: MatrixTag, beta: bool = False):
        for name in self._names(tag, beta):
            log.compare(factorized(name), build(name), matrix=name.label())

    def _check_closed_columns(self, log: CaseLog, tag: MatrixTag):
        for name in self._names(tag, tag in BETA_TAGS):
            operator = build(name)
            for p in range(name.dim):
                log.compare(closed_form_column(name, p), operator.column(p), matrix=name.label(), p=p)

    def _check_conjugate_family(self, log: CaseLog, tag: MatrixTag):
        for name in self._names(tag, beta=True):
            operator = build(name)
            for p in range(name.dim):
                log.compare(closed_form_column(name, p), operator.column(p), matrix=name.label(), p=p)
            for p in corner_columns(name):
                log.compare(closed_form_column(name, p, use_corner=True), operator.column(p),
                            matrix=name.label(), corner=p)
            log.compare(conjugated_by_s(name), operator, matrix=name.label(), via="S")
            log.compare(factorized(name), operator, matrix=name.label(), via="factorized")

    # --- inversione di beta --------------------------------------------------
    def _check_beta_inversion(self, log: CaseLog, tag: MatrixTag):
        reverse = MatrixTag.JT if tag in TILDE_TAGS else MatrixTag.J
        for name in self._names(tag, beta=True):
            j = _op(reverse, name.n)
            log.compare(j @ build(name) @ j, build(inverse_name(name)), matrix=name.label())

    def _check_beta_inversion_g_a(self, log: CaseLog):
        self._check_beta_inversion(log, MatrixTag.G)
        self._check_beta_inversion(log, MatrixTag.A)

    # --- relazioni strutturali -------------------------------------------------
    def _check_shift_relations(self, log: CaseLog):
        for n in self._sizes():
            log.expect(shift_relations_check(n), n=n)
        forward = [tag for tag in INVERSE_TAGS if not tag.value.endswith("inv")]
        for tag in forward:
            for name in self._names(tag):
                product = build(name) @ build(inverse_name(name))
                log.expect(product.is_identity(), matrix=name.label())
        for tag in (MatrixTag.A, MatrixTag.G, MatrixTag.H, MatrixTag.T):
            for name in self._names(tag, beta=True):
                product = build(name) @ build(inverse_name(name))
                log.expect(product.is_identity(), matrix=name.label())

    def _check_stirling(self, log: CaseLog):
        first, second = StirlingKind.FIRST, StirlingKind.SECOND
        for n in self._sizes(0):
            falling = _op(MatrixTag.UINV, n) @ _op(MatrixTag.VINV, n)
            rising = _op(MatrixTag.V, n) @ _op(MatrixTag.U, n)
            for p in range(n + 1):
                scale = Fraction(factorial(n), factorial(p))
                expected = Polynomial(scale * stirling(first, p, m) for m in range(p + 1))
                log.compare(falling.column(p), expected, n=n, p=p, product="Uinv Vinv")
                expected = Polynomial(factorial(m) * stirling(second, p, m) / factorial(n)
                                      for m in range(p + 1))
                log.compare(rising.column(p), expected, n=n, p=p, product="V U")
            if n == 0:
                continue
            falling = _op(MatrixTag.UTINV, n) @ _op(MatrixTag.VTINV, n)
            rising = _op(MatrixTag.VT, n) @ _op(MatrixTag.UT, n)
            for p in range(n):
                scale = Fraction(factorial(n), factorial(p + 1))
                expected = Polynomial(scale * stirling(first, p + 1, m) for m in range(1, p + 2))
                log.compare(falling.column(p), expected, n=n, p=p, product="Utinv Vtinv")
                expected = Polynomial(factorial(m) * stirling(second, p + 1, m) / factorial(n)
                                      for m in range(1, p + 2))
                log.compare(rising.column(p), expected, n=n, p=p, product="Vt Ut")

    def _check_column_sums(self, log: CaseLog):
        for name in self._names(MatrixTag.A, beta=True):
            operator = build(name)
            for p in range(name.dim):
                log.compare(operator.column(p)(1), 1, matrix=name.label(), p=p)

    def _check_group_law(self, log: CaseLog):
        for n in self._sizes():
            x_name = MatrixName(MatrixTag.X, n)
            x_op = build(x_name)
            log.compare(factorized(x_name), x_op, matrix=x_name.label())
            identity = FiniteOperator.identity(n + 1)
            log.compare(identity + x_op, _op(MatrixTag.G, n, Fraction(1, n)), n=n, root=True)
            powers = [identity]
            for _ in range(n):
                powers.append(powers[-1] @ x_op)
            for beta in self.params.beta_grid:
                series = FiniteOperator.zeros(n + 1, n + 1)
                for m, power in enumerate(powers):
                    series = series + power * rat_binomial(n * beta, m)
                log.compare(series, _op(MatrixTag.G, n, beta), n=n, beta=beta)

    def _check_reduction(self, log: CaseLog, tag: MatrixTag):
        for name in self._names(tag, beta=True):
            for m in range(1, name.n):
                log.compare(reduce_conjugation(name, m), build(reduced_name(name, m)),
                            matrix=name.label(), m=m)

    def _check_displayed(self, log: CaseLog):
        for entry in DISPLAYED_MATRICES:
            log.compare(entry.construct(), entry.expected(), matrix=entry.label)
        for triangle in DISPLAYED_TRIANGLES:
            log.compare(triangle.actual(), triangle.expected(), triangle=triangle.label)
        log.note(f"{len(DISPLAYED_MATRICES)} matrices, {len(DISPLAYED_TRIANGLES)} triangles")
