# verify/example_checks.py
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator

from algebra.exact_core import Polynomial, poly_reverse, rat_binomial, rising_poly
from algebra.series import TruncatedSeries
from arrays.lagrange import lagrange_associate, log_derivative_term
from arrays.riordan import (
    ArrayFlavor,
    SeriesPair,
    catalan_series,
    derivative_pair,
    diagonal_series,
    euler_poly,
    exp_series,
    genbinom_series,
    geometric_series,
    log_derivative_pair,
    log_derivative_prefactor,
    numerator,
    one_plus_x,
    sheffer_row,
    sheffer_u_row,
    type_b_gep,
    type_b_gnp,
)
from arrays.transforms import MatrixName, MatrixTag, build, multiplication, shift_operator
from verify.base_check import BaseVerifier, CaseLog, CheckBody
from verify.displayed import DISPLAYED_TRIANGLES

logger = logging.getLogger(__name__)

ORD = ArrayFlavor.ORDINARY
EXP = ArrayFlavor.EXPONENTIAL

TRIANGLES = {triangle.label: triangle for triangle in DISPLAYED_TRIANGLES}


def _double_factorial_ratio(n: int) -> Fraction:
    """(2n)!/n!"""
    return Fraction(factorial(2 * n), factorial(n))


def _euler_tilde(k: int) -> Polynomial:
    """A_k/x, con A~_0 = 1"""
    return Polynomial.one() if k == 0 else euler_poly(k).div_x()


def _reciprocal_pair(a: TruncatedSeries) -> SeriesPair:
    """(1 + x(log a)', x/a)"""
    return SeriesPair(log_derivative_prefactor(a), a.inverse())


class ExampleVerifier(BaseVerifier):
    """Esempi svolti: valori attesi scritti in forma chiusa"""

    def checks(self) -> Dict[str, CheckBody]:
        return {
            "EX1": self._check_catalan_rising,
            "EX2": self._check_one_plus_x_gnp,
            "EX3": self._check_catalan_gep,
            "EX4": self._check_one_plus_x_gep,
            "EX5": self._check_geometric,
            "EX6": self._check_exponential,
            "EX7": self._check_binomial_prefactor,
            "EX8": self._check_ordinary_coincidences,
            "EX9": self._check_exponential_chain,
        }

    def _indices(self, check_id: str) -> Iterator[int]:
        return iter(range(1, self.n_limit(check_id) + 1))

    def _num(self, log: CaseLog, pair: SeriesPair, flavor: ArrayFlavor, n: int, **case) -> Polynomial:
        return log.numerator(numerator(pair, flavor, n, guard=self.params.guard), n=n, **case)

    def _op(self, tag: MatrixTag, n: int, beta=None):
        return build(MatrixName(tag, n, beta))

    def _triangles(self, log: CaseLog, *labels: str):
        for label in labels:
            triangle = TRIANGLES[label]
            log.compare(triangle.actual(), triangle.expected(), triangle=label)

    # --- serie di Catalan e 1+x ---------------------------------------------------
    def _check_catalan_rising(self, log: CaseLog):
        catalan = catalan_series(self.order)
        pair = derivative_pair(catalan)
        for n in self._indices("EX1"):
            scale = _double_factorial_ratio(n)
            rising = rising_poly(n).shift(n + 1)
            log.compare(self._op(MatrixTag.F, n).apply(rising), scale, n=n, step="F_n [x+n+1]_n")
            log.compare(sheffer_row(pair, n), rising, n=n, step="sheffer row of ((xC)', xC)")
            log.compare(self._num(log, pair, EXP, n), scale, n=n, step="type B phi")
            log.compare(sheffer_u_row(catalan, n).div_x(), rising_poly(n - 1).shift(n + 1), n=n, step="u~_n")

    def _check_one_plus_x_gnp(self, log: CaseLog):
        self._triangles(log, "(1+x, x(1+x))", "(1+x(log C)', xC)")
        onepx = one_plus_x(self.order)
        catalan_pair = log_derivative_pair(catalan_series(self.order))
        for n in self._indices("EX2"):
            half = _double_factorial_ratio(n) / 2
            expected = Polynomial([1, 1]).mul_x(n - 1) * half
            log.compare(log.numerator(type_b_gnp(onepx, n, self.params.guard)), expected, n=n, step="type B phi")
            log.compare(self._op(MatrixTag.S, n).apply(Polynomial.monomial(n - 1)), expected, n=n, step="S_n x^(n-1)")
            log.compare(self._num(log, catalan_pair, EXP, n), Polynomial([1, 1]) * half, n=n, step="reversed over C")

    def _check_catalan_gep(self, log: CaseLog):
        self._triangles(log, "((xC)', xC)", "(1+x(log C)', x/C)")
        catalan = catalan_series(self.order)
        for n in self._indices("EX3"):
            expected = Polynomial(rat_binomial(-n, m) * comb(2 * n, n - m) for m in range(n + 1))
            log.compare(log.numerator(type_b_gep(catalan, n, self.params.guard)), expected, n=n, step="type B alpha")
            via_s = self._op(MatrixTag.SINV, n).apply(Polynomial.one()) * _double_factorial_ratio(n)
            log.compare(via_s, expected, n=n, step="(2n)!/n! S_n^-1 x^0")
            reversed_ = Polynomial(comb(2 * n, m) * rat_binomial(-n, n - m) for m in range(n + 1)) * (-1) ** n
            log.compare(self._num(log, _reciprocal_pair(catalan), ORD, n), reversed_, n=n, step="over x/C")

    def _check_one_plus_x_gep(self, log: CaseLog):
        self._triangles(log, "((x(1+x))', x(1+x))", "(1+x(log(1+x))', x/(1+x))")
        onepx = one_plus_x(self.order)
        for n in self._indices("EX4"):
            expected = Polynomial([2, -1]).mul_x(n - 1)
            log.compare(log.numerator(type_b_gep(onepx, n, self.params.guard)), expected, n=n, step="type B alpha")
            phi = Polynomial.monomial(n - 1, _double_factorial_ratio(n))
            log.compare(self._num(log, derivative_pair(onepx), EXP, n), phi, n=n, step="type B phi")
            log.compare(self._op(MatrixTag.SINV, n).apply(phi), expected, n=n, step="S_n^-1")
            log.compare(self._num(log, _reciprocal_pair(onepx), ORD, n), Polynomial([-1, 2]) * (-1) ** n,
                        n=n, step="over x/(1+x)")

    # --- 1/(1-x) ed e^x -----------------------------------------------------------------
    def _check_geometric(self, log: CaseLog):
        n_max = self.n_limit("EX5")
        geom = geometric_series(max(self.order, 2 * n_max + self.params.guard))
        one_minus_x = Polynomial([1, -1])
        for n in self._indices("EX5"):
            expected = (1 - one_minus_x ** (n + 1)).div_x()
            log.compare(log.numerator(type_b_gep(geom, n, self.params.guard)), expected, n=n, step="type B alpha")
            reversed_ = one_minus_x ** (n + 1) - Polynomial([0, -1]) ** (n + 1)
            log.compare(self._num(log, _reciprocal_pair(geom), ORD, n), reversed_, n=n, step="over x(1-x)")
        log.compare(log_derivative_prefactor(geom), geom, step="1 + x(log a)' = a")

    def _check_exponential(self, log: CaseLog):
        order = self.order
        exp = exp_series(order)
        pair = derivative_pair(exp)
        one_minus_x = Polynomial([1, -1])
        for n in self._indices("EX6"):
            diagonal = diagonal_series(pair, ORD, n, order)
            expected = TruncatedSeries(
                [Fraction((m + 1) ** n + n * (m + 1) ** (n - 1), factorial(n)) for m in range(order + 1)], order
            )
            log.compare(diagonal, expected, n=n, step="diagonal")
            gep = (_euler_tilde(n) + one_minus_x * _euler_tilde(n - 1) * n) / factorial(n)
            log.compare(log.numerator(type_b_gep(exp, n, self.params.guard)), gep, n=n, step="type B alpha")
            reversed_ = (euler_poly(n) - one_minus_x * euler_poly(n - 1) * n) * Fraction((-1) ** n, factorial(n))
            log.compare(self._num(log, _reciprocal_pair(exp), ORD, n), reversed_, n=n, step="over x e^-x")
            log.compare(poly_reverse(gep, n) * (-1) ** n, reversed_, n=n, step="reversal")

            # F~_n q = F_n (x+n+1) q(x+1) = ^BF_n (x+n) q
            f_lift = self._op(MatrixTag.F, n) @ multiplication(Polynomial([n + 1, 1]), n + 1, n) @ shift_operator(1, n)
            bf_lift = self._op(MatrixTag.BF, n) @ multiplication(Polynomial([n, 1]), n + 1, n)
            for label, lifted in (("F", f_lift), ("BF", bf_lift)):
                rows = lifted.to_rows()
                log.expect(all(v == 0 for v in rows[n]), n=n, lift=label, step="last row")
                log.compare(lifted.block(n, n), self._op(MatrixTag.FT, n), n=n, lift=label)

            u_t = sheffer_u_row(exp, n).div_x()
            phi_t = self._num(log, SeriesPair.plain(exp), EXP, n).div_x()
            log.compare(self._op(MatrixTag.FT, n).apply(u_t), phi_t, n=n, step="F~ u~")
            log.compare(self._op(MatrixTag.F, n).apply(Polynomial([n + 1, 1]) * u_t.shift(1)), phi_t,
                        n=n, step="F (x+n+1) u~(x+1)")
            log.compare(self._op(MatrixTag.BF, n).apply(Polynomial([n, 1]) * u_t), phi_t,
                        n=n, step="BF (x+n) u~")

    # --- serie binomiali generalizzate -------------------------------------------------
    def _binomial(self, beta) -> TruncatedSeries:
        return genbinom_series(self.order, Fraction(beta))

    def _check_binomial_prefactor(self, log: CaseLog):
        for beta in self.params.beta_grid:
            a_beta = self._binomial(beta)
            head = log_derivative_term(a_beta, beta)
            log.compare(a_beta * log_derivative_term(a_beta, beta - 1), head, beta=beta, step="prefactor")
            pair = SeriesPair(head, a_beta)
            for n in self._indices("EX7"):
                g_beta = self._op(MatrixTag.G, n, beta)
                log.compare(self._num(log, pair, ORD, n, beta=beta), g_beta.apply(Polynomial.monomial(n)),
                            n=n, beta=beta, step="G x^n")
                log.compare(g_beta.apply(Polynomial.one()),
                            self._op(MatrixTag.G, n, beta + 1).apply(Polynomial.monomial(n)),
                            n=n, beta=beta, step="G^beta x^0 = G^(beta+1) x^n")

    def _check_ordinary_coincidences(self, log: CaseLog):
        for beta in self.params.beta_grid:
            a_beta, a_next = self._binomial(beta), self._binomial(beta + 1)
            shifted_pair = SeriesPair(log_derivative_term(a_next, beta), a_next)
            scaled_pair = SeriesPair(a_beta * log_derivative_term(a_beta, beta), a_beta)
            for n in self._indices("EX8"):
                g_beta = self._op(MatrixTag.G, n, beta)
                x_poly = Polynomial.x()
                log.compare(g_beta.apply(x_poly), self._num(log, shifted_pair, ORD, n, beta=beta),
                            n=n, beta=beta, step="G x")
                log.compare(g_beta.apply(Polynomial.monomial(n - 1)), self._num(log, scaled_pair, ORD, n, beta=beta),
                            n=n, beta=beta, step="G x^(n-1)")
                reversed_ = self._op(MatrixTag.J, n).apply(g_beta.apply(Polynomial.monomial(n - 1)))
                log.compare(self._op(MatrixTag.G, n, -beta).apply(x_poly), reversed_,
                            n=n, beta=beta, step="G^-beta x")

            a_mirror = self._binomial(1 - beta)
            log.compare(a_mirror, a_beta.inverse().dilate(-1), beta=beta, step="A_(1-beta)")
            log.compare(log_derivative_term(a_mirror, -beta), log_derivative_term(a_beta, beta).dilate(-1),
                        beta=beta, step="prefactor 1-beta")
            a_neg = self._binomial(-beta)
            log.compare(a_neg, a_next.inverse().dilate(-1), beta=beta, step="A_(-beta)")
            log.compare(a_neg * log_derivative_term(a_neg, -beta),
                        (a_next.inverse() * log_derivative_term(a_next, beta)).dilate(-1),
                        beta=beta, step="prefactor -beta")

    def _check_exponential_chain(self, log: CaseLog):
        order = self.order
        onepx = one_plus_x(order)
        for beta in self.params.beta_grid:
            a_beta, a_prev = self._binomial(beta), self._binomial(beta - 1)
            pair = SeriesPair(log_derivative_term(a_beta, beta), a_beta)
            for n in self._indices("EX9"):
                h_beta = self._op(MatrixTag.H, n, beta)
                top = h_beta.apply(Polynomial.monomial(n)) * _double_factorial_ratio(n)
                log.compare(top, self._num(log, pair, EXP, n, beta=beta), n=n, beta=beta, step="H x^n")
                log.compare(h_beta.apply(Polynomial.one()),
                            self._op(MatrixTag.H, n, beta + 2).apply(Polynomial.monomial(n)),
                            n=n, beta=beta, step="H^beta x^0 = H^(beta+2) x^n")
                log.compare(self._op(MatrixTag.H, n, -beta).apply(Polynomial.one()),
                            self._op(MatrixTag.J, n).apply(h_beta.apply(Polynomial.monomial(n))),
                            n=n, beta=beta, step="H^-beta x^0")

            d = lagrange_associate(onepx, beta - 1, -1, order)
            x_d = d.mul_x().truncate(order)
            chained = d.mul_x().derivative() * log_derivative_term(a_beta, beta).compose(x_d)
            prev_head = log_derivative_term(a_prev, beta - 1) * d
            log.compare(chained, prev_head, beta=beta, step="prefactor chain")
            a_mirror = self._binomial(2 - beta)
            log.compare(a_mirror, d.dilate(-1), beta=beta, step="A_(2-beta)")
            log.compare(log_derivative_term(a_mirror, 2 - beta), prev_head.dilate(-1),
                        beta=beta, step="prefactor 2-beta")
