# verify/polynomial_checks.py
"""Check sui polinomi numeratori: valutazioni, forme chiuse, inversioni, pipeline e oracoli."""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List

from algebra.exact_core import Polynomial, poly_reverse, rat_binomial
from algebra.series import TruncatedSeries, lagrange_reversion_coefficient
from arrays.lagrange import generalized_binomial, gep_closed_form, gnp_closed_form
from arrays.riordan import (
    ArrayFlavor,
    SeriesPair,
    catalan_series,
    column,
    denominator_exponent,
    derivative_pair,
    diagonal_series,
    entry_grid,
    euler_poly,
    exp_series,
    geometric_series,
    gnp_generating_check,
    gnp_generating_series,
    inverse_series,
    log_derivative_pair,
    log_derivative_prefactor,
    narayana_b_poly,
    narayana_closed_form_series,
    narayana_poly,
    numerator,
    one_plus_x,
    sheffer_row,
    sheffer_u_row,
    square_row,
    type_b_gep,
    type_b_gnp,
)
from arrays.transforms import MatrixName, MatrixTag, build
from verify.base_check import BaseVerifier, CaseLog, CheckBody, catalog_cases

logger = logging.getLogger(__name__)

ORD = ArrayFlavor.ORDINARY
EXP = ArrayFlavor.EXPONENTIAL

# A_1..A_4 tabulati, coefficienti da x^0
EULER_TABLE = {
    1: [0, 1],
    2: [0, 1, 1],
    3: [0, 1, 4, 1],
    4: [0, 1, 11, 11, 1],
}


def _as_poly(value) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial([value])


def _twisted(p: Polynomial, n: int) -> Polynomial:
    """(-1)^n J_n p"""
    return poly_reverse(p, n) * (-1) ** n


def _truncated_poly(series: TruncatedSeries) -> Polynomial:
    return Polynomial(series.coeffs)


def _clip(p: Polynomial, order: int) -> Polynomial:
    return Polynomial(p.coeffs[: order + 1])


class PolynomialVerifier(BaseVerifier):
    """Identita' sui GEP e GNP e oracoli indipendenti"""

    def checks(self) -> Dict[str, CheckBody]:
        return {
            "T2": self._check_evaluation_at_one,
            "T5": self._check_gep_closed_form,
            "T8": self._check_gnp_closed_form,
            "GFNARAYANA": self._check_generating_function,
            "SUMID1": lambda log: self._check_alternating_sum(log, "SUMID1", shift=0),
            "SUMID2": lambda log: self._check_alternating_sum(log, "SUMID2", shift=1),
            "REVERSAL_GEP": self._check_reversal_gep,
            "REVERSAL_GNP": self._check_reversal_gnp,
            "PSEUDOINV": self._check_pseudo_involution,
            "EULER": self._check_euler,
            "INTRO_PIPELINES": self._check_intro_pipelines,
            "NARAYANA_CROSS": self._check_narayana_cross,
            "ORACLE_ARRAY": self._check_array_oracle,
            "REVERSION_ORACLE": self._check_reversion_oracle,
        }

    def _numerator(self, log: CaseLog, pair: SeriesPair, flavor: ArrayFlavor, n: int, **params) -> Polynomial:
        return log.numerator(numerator(pair, flavor, n, guard=self.params.guard), n=n, **params)

    # --- valutazioni e forme chiuse ------------------------------------------
    def _check_evaluation_at_one(self, log: CaseLog):
        n_max = self.n_limit("T2")
        for label, a in catalog_cases(max(self.order, n_max)):
            pair = SeriesPair.plain(a)
            for n in range(1, n_max + 1):
                alpha = self._numerator(log, pair, ORD, n, series=label)
                log.compare(alpha(1), a[1] ** n, series=label, n=n, flavor="ordinary")
                phi = self._numerator(log, pair, EXP, n, series=label)
                expected = a[1] ** n * Fraction(factorial(2 * n), factorial(n))
                log.compare(phi(1), expected, series=label, n=n, flavor="exponential")

    def _check_gep_closed_form(self, log: CaseLog):
        n_max = self.n_limit("T5")
        order = max(self.order, n_max)
        x = Polynomial.x()
        for beta in self.params.beta_grid:
            pair = SeriesPair.plain(generalized_binomial(beta, 1, order))
            for n in range(1, n_max + 1):
                closed = gep_closed_form(beta, n)
                log.compare(closed, self._numerator(log, pair, ORD, n, beta=beta), beta=beta, n=n)
                log.compare(gep_closed_form(1 - beta, n), poly_reverse(closed, n).mul_x(),
                            beta=beta, n=n, reflected=True)
        for n in range(1, n_max + 1):
            log.compare(gep_closed_form(0, n), Polynomial.monomial(n), beta=0, n=n)
            log.compare(gep_closed_form(1, n), x, beta=1, n=n)
            if n % 2 == 0:
                half = (1 + x) * Polynomial.monomial(n // 2) / 2
                log.compare(gep_closed_form(Fraction(1, 2), n), half, beta="1/2", n=n)

    def _check_gnp_closed_form(self, log: CaseLog):
        n_max = self.n_limit("T8")
        order = max(self.order, n_max)
        for beta in self.params.beta_grid:
            pair = SeriesPair.plain(generalized_binomial(beta, 1, order))
            for n in range(1, n_max + 1):
                closed = gnp_closed_form(beta, n)
                log.compare(closed, self._numerator(log, pair, EXP, n, beta=beta), beta=beta, n=n)
                log.compare(gnp_closed_form(2 - beta, n), poly_reverse(closed, n).mul_x(),
                            beta=beta, n=n, reflected=True)
        for n in range(1, n_max + 1):
            central = Fraction(factorial(2 * n), factorial(n))
            log.compare(gnp_closed_form(0, n), Polynomial.monomial(n, central), beta=0, n=n)
            log.compare(gnp_closed_form(1, n), narayana_poly(n) * factorial(n + 1), beta=1, n=n)
            log.compare(gnp_closed_form(2, n), Polynomial.monomial(1, central), beta=2, n=n)

    def _check_generating_function(self, log: CaseLog):
        n_max = self.n_limit("GFNARAYANA")
        order = max(self.order, n_max)
        for label, a in (("geom", geometric_series(order)), ("exp", exp_series(order)),
                         ("onepx", one_plus_x(order))):
            log.expect(gnp_generating_check(a, n_max, self.params.guard), series=label)
        generating = gnp_generating_series(geometric_series(order), n_max)
        closed = narayana_closed_form_series(n_max)
        for n in range(n_max + 1):
            log.compare(_as_poly(generating[n]), narayana_poly(n), n=n, side="reversion")
            log.compare(_as_poly(closed[n]), narayana_poly(n), n=n, side="closed form")

    def _check_alternating_sum(self, log: CaseLog, check_id: str, shift: int):
        n_max = self.n_limit(check_id)
        for n in range(n_max + 1):
            for p in range(n + 1):
                total = sum(
                    (-1) ** (n - m) * comb(2 * n + 1, n - m) * (m + shift) ** p * comb(m + n, n)
                    for m in range(n + 1)
                )
                base = n + 1 if shift == 0 else n
                log.compare(total, (-1) ** (n + p) * base ** p, n=n, p=p)

    # --- inversione e pseudo-involuzioni ------------------------------------------
    def _prefactors(self, order: int) -> List:
        return [("onepx", one_plus_x(order)), ("exp", exp_series(order))]

    def _check_reversal_gep(self, log: CaseLog):
        n_max = self.params.max_n
        for label, a in catalog_cases(self.order):
            reciprocal = a.inverse()
            for n in range(1, n_max + 1):
                alpha = self._numerator(log, SeriesPair.plain(a), ORD, n, series=label)
                flipped = self._numerator(log, SeriesPair.plain(reciprocal), ORD, n, series=label)
                log.compare(flipped, _twisted(alpha, n).mul_x(), series=label, n=n)
            for n in range(n_max + 1):
                for b_label, b in self._prefactors(self.order):
                    g = self._numerator(log, SeriesPair(b, a), ORD, n, series=label, b=b_label)
                    g_flip = self._numerator(log, SeriesPair(b * reciprocal, reciprocal), ORD, n,
                                             series=label, b=b_label)
                    log.compare(g_flip, _twisted(g, n), series=label, b=b_label, n=n)
                alpha_b = log.numerator(type_b_gep(a, n, self.params.guard), series=label, n=n)
                pair = SeriesPair(log_derivative_prefactor(a), reciprocal)
                log.compare(self._numerator(log, pair, ORD, n, series=label), _twisted(alpha_b, n),
                            series=label, n=n, type_b=True)

    def _check_reversal_gnp(self, log: CaseLog):
        n_max = self.params.max_n
        for label, a in catalog_cases(self.order):
            inverse = inverse_series(a)
            inner = inverse.mul_x()
            for n in range(n_max + 1):
                phi = self._numerator(log, SeriesPair.plain(a), EXP, n, series=label)
                if n >= 1:
                    flipped = self._numerator(log, SeriesPair.plain(inverse), EXP, n, series=label)
                    log.compare(flipped, _twisted(phi, n).mul_x(), series=label, n=n)
                derived = self._numerator(log, derivative_pair(inverse), EXP, n, series=label)
                log.compare(derived, _twisted(phi, n), series=label, n=n, derivative=True)
                for b_label, b in self._prefactors(self.order):
                    h = self._numerator(log, SeriesPair(b, a), EXP, n, series=label, b=b_label)
                    head = b.compose(inner) * inner.derivative()
                    h_flip = self._numerator(log, SeriesPair(head, inverse), EXP, n, series=label, b=b_label)
                    log.compare(h_flip, _twisted(h, n), series=label, b=b_label, n=n)
                phi_b = log.numerator(type_b_gnp(a, n, self.params.guard), series=label, n=n)
                flipped_b = self._numerator(log, log_derivative_pair(inverse), EXP, n, series=label)
                log.compare(flipped_b, _twisted(phi_b, n), series=label, n=n, type_b=True)

    def _check_pseudo_involution(self, log: CaseLog):
        for k in (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)):
            a = geometric_series(self.order, k)
            log.compare(inverse_series(a), a.dilate(-1), k=k)
            pair = SeriesPair.plain(a)
            for n in range(1, self.params.max_n + 1):
                phi = self._numerator(log, pair, EXP, n, k=k)
                log.compare(phi, poly_reverse(phi, n).mul_x(), k=k, n=n)

    # --- famiglie classiche e pipeline -------------------------------------------
    def _check_euler(self, log: CaseLog):
        for n, coeffs in EULER_TABLE.items():
            log.compare(euler_poly(n), Polynomial(coeffs), n=n)
        log.compare(euler_poly(0), Polynomial.one(), n=0)
        for n in range(self.n_limit("EULER") + 1):
            log.compare(euler_poly(n)(1), factorial(n), n=n, at_one=True)

    def _check_intro_pipelines(self, log: CaseLog):
        op = lambda tag, n: build(MatrixName(tag, n))  # noqa: E731
        for label, a in catalog_cases(self.order):
            pair = SeriesPair.plain(a)
            for n in range(1, self.params.max_n + 1):
                case = {"series": label, "n": n}
                u = sheffer_u_row(a, n)
                u_t = u.div_x()
                alpha = self._numerator(log, pair, ORD, n, series=label)
                phi = self._numerator(log, pair, EXP, n, series=label)
                alpha_t, phi_t = alpha.div_x(), phi.div_x()
                log.compare(op(MatrixTag.UT, n).apply(u_t), alpha_t, step="Ut u", **case)
                log.compare(op(MatrixTag.VT, n).apply(alpha_t), square_row(pair, n).div_x(), step="Vt alpha", **case)
                log.compare(op(MatrixTag.FT, n).apply(u_t), phi_t, step="Ft u", **case)
                log.compare(op(MatrixTag.ST, n).apply(alpha_t), phi_t, step="St alpha", **case)
                phi_b = log.numerator(type_b_gnp(a, n, self.params.guard), **case)
                log.compare(op(MatrixTag.F, n).apply(u.shift(1)), phi_b, step="F u(x+1)", **case)
                log.compare(op(MatrixTag.BF, n).apply(u), phi_b, step="BF u", **case)
                for b_label, b in self._prefactors(self.order):
                    full = SeriesPair(b, a)
                    s = sheffer_row(full, n)
                    g = self._numerator(log, full, ORD, n, series=label, b=b_label)
                    h = self._numerator(log, full, EXP, n, series=label, b=b_label)
                    log.compare(op(MatrixTag.U, n).apply(s), g, step="U s", b=b_label, **case)
                    log.compare(op(MatrixTag.F, n).apply(s), h, step="F s", b=b_label, **case)
                    log.compare(op(MatrixTag.S, n).apply(g), h, step="S g", b=b_label, **case)
                    log.compare(op(MatrixTag.VINV, n).apply(square_row(full, n)), g,
                                step="Vinv w", b=b_label, **case)

    def _check_narayana_cross(self, log: CaseLog):
        catalan = SeriesPair.plain(catalan_series(self.order))
        for n in range(1, self.params.max_n + 1):
            one = Polynomial.one()
            st = build(MatrixName(MatrixTag.ST, n)).apply(one).mul_x()
            log.compare(st, narayana_poly(n) * factorial(n + 1), n=n, side="St")
            central = Fraction(factorial(2 * n), factorial(n))
            st_inv = build(MatrixName(MatrixTag.STINV, n)).apply(one).mul_x() * central
            closed = Polynomial(
                [0] + [rat_binomial(-n, m - 1) * comb(2 * n, n - m) / n for m in range(1, n + 1)]
            )
            log.compare(st_inv, closed, n=n, side="Stinv")
            log.compare(self._numerator(log, catalan, ORD, n), closed, n=n, side="catalan")
        for beta in (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)):
            a = geometric_series(self.order, beta)
            for n in range(self.params.max_n + 1):
                phi_b = log.numerator(type_b_gnp(a, n, self.params.guard), beta=beta, n=n)
                log.compare(phi_b, narayana_b_poly(n) * (beta ** n * factorial(n)), beta=beta, n=n)

    # --- oracoli -------------------------------------------------------------------
    def _oracle_pairs(self, order: int) -> List:
        return [
            ("(1, e^x)", SeriesPair.plain(exp_series(order))),
            ("(1+x, C)", SeriesPair(one_plus_x(order), catalan_series(order))),
            ("(1/(1-x), 1/(1-x))", SeriesPair(geometric_series(order), geometric_series(order))),
            ("(e^x, 1+x)", SeriesPair(exp_series(order), one_plus_x(order))),
        ]

    def _check_array_oracle(self, log: CaseLog):
        n_max = self.n_limit("ORACLE_ARRAY")
        order = 2 * n_max + self.params.guard
        for label, pair in self._oracle_pairs(order):
            b, a = _truncated_poly(pair.b), _truncated_poly(pair.a)
            x = Polynomial.x()
            # colonne b (x a)^m e b a^m per moltiplicazione ripetuta
            tri_cols, sq_cols = [], []
            tri, sq = b, b
            for _ in range(order + 1):
                tri_cols.append(tri)
                sq_cols.append(sq)
                tri, sq = _clip(tri * x * a, order), _clip(sq * a, order)
            size = n_max + 1
            grid = [[tri_cols[j][i] for j in range(size)] for i in range(size)]
            log.compare(entry_grid(pair, ORD, size, triangular=True).to_rows(), grid, pair=label, view="grid")
            for m in range(size):
                col = column(pair, ORD, m)
                log.compare([col[i] for i in range(order + 1)], [sq_cols[m][i] for i in range(order + 1)],
                            pair=label, column=m)
            for n in range(n_max + 1):
                for flavor in (ORD, EXP):
                    coeffs = []
                    for m in range(order + 1):
                        value = sq_cols[m][n]
                        if flavor is EXP:
                            value = value * Fraction(factorial(n + m), factorial(m))
                        coeffs.append(value)
                    brute = TruncatedSeries(coeffs, order)
                    case = {"pair": label, "n": n, "flavor": flavor.value}
                    log.compare(diagonal_series(pair, flavor, n, order), brute, view="diagonal", **case)
                    cleared = brute * TruncatedSeries.from_polynomial(
                        Polynomial([1, -1]) ** denominator_exponent(flavor, n), order
                    )
                    result = numerator(pair, flavor, n, order=order)
                    log.compare(result.numerator, Polynomial(cleared.coeffs[: n + 1]), view="numerator", **case)
                    log.expect(all(c == 0 for c in cleared.coeffs[n + 1:]), view="residual", **case)

    def _check_reversion_oracle(self, log: CaseLog):
        for label, a in catalog_cases(self.order):
            g = a.mul_x()
            reverted = g.reversion()
            for n in range(1, g.order + 1):
                log.compare(reverted[n], lagrange_reversion_coefficient(g, n), series=label, n=n)
        order = self.order
        x = TruncatedSeries.x(order)
        mobius = (x / (1 - x)).reversion()
        log.compare(mobius, x / (1 + x), series="x/(1-x)")
        catalan = catalan_series(order)
        log.compare((x * (1 - x)).reversion(), catalan.mul_x().truncate(order), series="x(1-x)")
