# verify/lagrange_checks.py
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from algebra.series import TruncatedSeries
from arrays.lagrange import (
    beta_prefactor,
    beta_u_row,
    dual_basis_residual,
    extraction_law_holds,
    functional_equation_residuals,
    generalized_binomial,
    inverse_pair_check,
    lagrange_associate,
)
from arrays.riordan import (
    ArrayFlavor,
    SeriesPair,
    catalan_series,
    exp_series,
    genbinom_series,
    geometric_series,
    numerator,
    one_plus_x,
    sheffer_row,
    sheffer_u_row,
)
from arrays.transforms import MatrixName, MatrixTag, build, shift_operator
from verify.base_check import BaseVerifier, CaseLog, CheckBody, catalog_cases

logger = logging.getLogger(__name__)

EXTRACTION_PHIS = (Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2))
INVERSE_PHIS = (Fraction(1), Fraction(1, 2), Fraction(-1))
DUAL_PHIS = (Fraction(1), Fraction(-1, 2))


class LagrangeVerifier(BaseVerifier):
    """Strato di Lagrange: serie associate, basi duali, pipeline con beta"""

    def checks(self) -> Dict[str, CheckBody]:
        return {
            "R2": self._check_transposed_inverse_power,
            "DUALBASIS": self._check_dual_basis,
            "CATALOG_CONSISTENCY": self._check_catalog,
            "BETA_SHIFT": self._check_beta_shift,
            "LAGRANGE_FUNCEQ": self._check_functional_equations,
            "LAGRANGE_EXTRACT": self._check_extraction_law,
            "LAGRANGE_INVERSE": self._check_inverse_pairs,
            "LAGRANGE_SHIFT": self._check_shift_law,
        }

    def _prefactors(self, order: int) -> List[Tuple[str, TruncatedSeries]]:
        return [
            ("1", TruncatedSeries.constant(1, order)),
            ("onepx", one_plus_x(order)),
            ("exp", exp_series(order)),
        ]

    # --- (b, a^-1)^T ------------------------------------------------------------
    def _check_transposed_inverse_power(self, log: CaseLog):
        order, n_max = self.order, self.params.max_n
        for label, a in catalog_cases(order):
            reciprocal = a.inverse()
            powers = [TruncatedSeries.constant(1, order)]
            for _ in range(n_max + order):
                powers.append(powers[-1] * reciprocal)
            for b_label, b in self._prefactors(order):
                case = {"series": label, "b": b_label}
                pair = SeriesPair(b, a)
                for i in range(n_max + 1):
                    column = b * powers[i]
                    for j in range(n_max + 1):
                        expected = sheffer_row(pair, j)(-i) / factorial(j)
                        log.compare(column[j], expected, i=i, j=j, **case)
                head = beta_prefactor(a, -1, b)
                for n in range(n_max + 1):
                    diagonal = TruncatedSeries(
                        [(b * powers[n + m])[m] for m in range(order + 1)], order
                    )
                    lagrange_form = head * lagrange_associate(a, -1, -n, order)
                    log.compare(diagonal, lagrange_form, diagonal=n, **case)

    # --- base duale e catalogo -------------------------------------------------------
    def _check_dual_basis(self, log: CaseLog):
        order = self.params.series_order
        for label, a in catalog_cases(order):
            for beta in self.params.beta_grid:
                for phi in DUAL_PHIS:
                    log.zero(dual_basis_residual(a, beta, phi, order), series=label, beta=beta, phi=phi)

    def _check_catalog(self, log: CaseLog):
        order = self.order
        x = TruncatedSeries.x(order)
        one = TruncatedSeries.constant(1, order)
        onepx = one_plus_x(order)
        catalan = catalan_series(order)
        for c in (Fraction(1), Fraction(2), Fraction(-1, 2)):
            log.compare(exp_series(order, c), (x * c).exp(), series="exp", c=c)
            log.compare(geometric_series(order, c), (one - x * c).inverse(), series="geom", c=c)
        log.compare(onepx, one + x, series="onepx")
        log.compare(catalan, one + x * catalan * catalan, series="catalan", relation="C = 1 + x C^2")
        log.compare(catalan, genbinom_series(order, Fraction(2)), series="catalan", relation="genbinom(2)")
        log.compare(catalan, lagrange_associate(onepx, 2, 1, order), series="catalan", relation="lagrange")
        log.compare(genbinom_series(order, Fraction(1)), geometric_series(order), series="genbinom(1)")
        half_root = TruncatedSeries([1, 0, Fraction(1, 4)], order).pow_rational(Fraction(1, 2))
        log.compare(genbinom_series(order, Fraction(1, 2)), (x / 2 + half_root) ** 2, series="genbinom(1/2)")
        root = TruncatedSeries([1, 4], order).pow_rational(Fraction(1, 2))
        log.compare(genbinom_series(order, Fraction(-1)), (root + 1) / 2, series="genbinom(-1)")
        for beta in self.params.beta_grid:
            log.compare(genbinom_series(order, beta), lagrange_associate(onepx, beta, 1, order),
                        series="genbinom", beta=beta)
            for phi in (Fraction(1, 2), Fraction(-1), Fraction(2)):
                log.compare(generalized_binomial(beta, phi, order), lagrange_associate(onepx, beta, phi, order),
                            series="genbinom", beta=beta, phi=phi)

    # --- pipeline con beta -------------------------------------------------------------
    def _check_beta_shift(self, log: CaseLog):
        order, guard = self.order, self.params.guard
        ord_, exp_ = ArrayFlavor.ORDINARY, ArrayFlavor.EXPONENTIAL

        def num(pair: SeriesPair, flavor: ArrayFlavor, n: int, **case):
            return log.numerator(numerator(pair, flavor, n, guard=guard), n=n, **case)

        for label, a in catalog_cases(order):
            b = one_plus_x(order)
            for beta in self.params.beta_grid:
                shifted = lagrange_associate(a, beta, 1, order)
                plain, plain_shifted = SeriesPair.plain(a), SeriesPair.plain(shifted)
                pair, pair_shifted = SeriesPair(b, a), SeriesPair(beta_prefactor(a, beta, b), shifted)
                for n in range(1, self.params.max_n + 1):
                    case = {"series": label, "beta": beta}
                    g = num(pair, ord_, n, **case)
                    log.compare(build(MatrixName(MatrixTag.G, n, beta)).apply(g),
                                num(pair_shifted, ord_, n, **case), n=n, step="G g", **case)
                    h = num(pair, exp_, n, **case)
                    log.compare(build(MatrixName(MatrixTag.H, n, beta)).apply(h),
                                num(pair_shifted, exp_, n, **case), n=n, step="H h", **case)
                    alpha_t = num(plain, ord_, n, **case).div_x()
                    log.compare(build(MatrixName(MatrixTag.A, n, beta)).apply(alpha_t),
                                num(plain_shifted, ord_, n, **case).div_x(), n=n, step="A alpha", **case)
                    phi_t = num(plain, exp_, n, **case).div_x()
                    log.compare(build(MatrixName(MatrixTag.T, n, beta)).apply(phi_t),
                                num(plain_shifted, exp_, n, **case).div_x(), n=n, step="T phi", **case)

    # --- identita' di Lagrange ----------------------------------------------------------
    def _check_functional_equations(self, log: CaseLog):
        order = self.params.series_order
        for label, a in catalog_cases(order):
            for beta in self.params.beta_grid:
                first, second = functional_equation_residuals(a, beta, order)
                log.zero(first, series=label, beta=beta, equation="assoc(x a^-beta) = a")
                log.zero(second, series=label, beta=beta, equation="a(x assoc^beta) = assoc")

    def _check_extraction_law(self, log: CaseLog):
        order = self.params.series_order
        for label, a in catalog_cases(order):
            for beta in self.params.beta_grid:
                for phi in EXTRACTION_PHIS:
                    for n in range(1, order + 1):
                        log.expect(extraction_law_holds(a, beta, phi, n), series=label, beta=beta, phi=phi, n=n)

    def _check_inverse_pairs(self, log: CaseLog):
        order = self.params.series_order
        for label, a in catalog_cases(order):
            for beta in self.params.beta_grid:
                for phi in INVERSE_PHIS:
                    log.expect(inverse_pair_check(a, phi, beta, order), series=label, beta=beta, phi=phi)

    def _check_shift_law(self, log: CaseLog):
        order = self.order
        for label, a in catalog_cases(order):
            for beta in self.params.beta_grid:
                shifted = lagrange_associate(a, beta, 1, order)
                for n in range(self.params.max_n + 1):
                    case = {"series": label, "beta": beta, "n": n}
                    expected = beta_u_row(a, beta, n)
                    log.compare(sheffer_u_row(shifted, n), expected, **case)
                    if n >= 1:
                        u_t = sheffer_u_row(a, n).div_x()
                        log.compare(shift_operator(n * beta, n).apply(u_t), expected.div_x(), step="E^(n beta)", **case)
