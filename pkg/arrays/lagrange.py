# arrays/lagrange.py
"""Serie di Lagrange generalizzate, serie binomiali generalizzate e identità collegate."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Optional, Tuple

from algebra.exact_core import (
    ArgumentError,
    DegreeError,
    LagrangeError,
    Polynomial,
    SeriesError,
    binomial_sum,
    rat_binomial,
)
from algebra.series import TruncatedSeries, sheffer_rows

logger = logging.getLogger(__name__)


@lru_cache(maxsize=128)
def _u_tilde_rows(a: TruncatedSeries, order: int) -> Tuple[Polynomial, ...]:
    """u~_n = u_n / x per (1, log a), n = 1..order (posizione 0 = u_0)"""
    if a[0] != 1:
        raise SeriesError("Lagrange series need a(0) = 1")
    base = a.truncate(order)
    rows = sheffer_rows(TruncatedSeries.constant(1, order), base.log(), order)
    out = [rows[0]]
    for n in range(1, order + 1):
        try:
            out.append(rows[n].div_x())
        except DegreeError as exc:
            raise LagrangeError(f"u_{n} is not divisible by x", n) from exc
    return tuple(out)


def lagrange_associate(
    a: TruncatedSeries, beta: Any, phi: Any, order: Optional[int] = None
) -> TruncatedSeries:
    """(beta)a^phi = sum phi/(phi + n beta) u_n(phi + n beta)/n! x^n"""
    order = a.order if order is None else order
    if order > a.order:
        raise SeriesError(f"order {order} exceeds base order {a.order}")
    beta, phi = Fraction(beta), Fraction(phi)
    rows = _u_tilde_rows(a, order)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(phi * rows[n](phi + n * beta) / factorial(n))
    return TruncatedSeries(coeffs, order)


@dataclass(frozen=True)
class BetaSeries:
    """Vista (beta)a^phi su una serie base"""
    base: TruncatedSeries
    beta: Fraction
    assoc: TruncatedSeries
    power: Fraction = Fraction(1)

    def __post_init__(self):
        if self.order >= 1 and self.assoc[1] != self.base[1]:
            raise SeriesError("associated series must share the linear coefficient of its base")

    @property
    def order(self) -> int:
        return self.assoc.order

    def powered(self) -> TruncatedSeries:
        return lagrange_associate(self.base, self.beta, self.power, self.order)


def beta_series(a: TruncatedSeries, beta: Any, phi: Any = 1) -> BetaSeries:
    return BetaSeries(a, Fraction(beta), lagrange_associate(a, beta, 1), Fraction(phi))


def generalized_binomial(beta: Any, phi: Any, order: int) -> TruncatedSeries:
    """Coefficienti phi/(phi + n beta) C(phi + n beta, n), forma con fattore rimosso"""
    beta, phi = Fraction(beta), Fraction(phi)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        z = phi + n * beta
        value = phi
        for k in range(1, n):
            value *= z - k
        coeffs.append(value / factorial(n))
    return TruncatedSeries(coeffs, order)


def gep_closed_form(beta: Any, n: int) -> Polynomial:
    """(beta)alpha_n = (1/n) sum C(n(1-beta), m-1) C(n beta, n-m) x^m"""
    if n < 1:
        raise ArgumentError(f"closed form needs n >= 1, got {n}")
    beta = Fraction(beta)
    return binomial_sum(
        [(m, rat_binomial(n * (1 - beta), m - 1) * rat_binomial(n * beta, n - m) / n)
         for m in range(1, n + 1)]
    )


def gnp_closed_form(beta: Any, n: int) -> Polynomial:
    """(beta)phi_n = ((n+1)!/n) sum C(n(2-beta), m-1) C(n beta, n-m) x^m"""
    if n < 1:
        raise ArgumentError(f"closed form needs n >= 1, got {n}")
    beta = Fraction(beta)
    scale = Fraction(factorial(n + 1), n)
    return binomial_sum(
        [(m, scale * rat_binomial(n * (2 - beta), m - 1) * rat_binomial(n * beta, n - m))
         for m in range(1, n + 1)]
    )


def log_derivative_term(series: TruncatedSeries, scale: Any = 1) -> TruncatedSeries:
    """1 + scale x (log series)'"""
    return series.log().derivative().mul_x() * Fraction(scale) + 1


def beta_prefactor(
    a: TruncatedSeries, beta: Any, b: Optional[TruncatedSeries] = None
) -> TruncatedSeries:
    """b(x (beta)a^beta(x)) (1 + x beta (log (beta)a)')"""
    beta = Fraction(beta)
    order = a.order
    b = TruncatedSeries.constant(1, order) if b is None else b.truncate(min(order, b.order))
    order = b.order
    assoc = lagrange_associate(a, beta, 1, order)
    inner = lagrange_associate(a, beta, beta, order).mul_x().truncate(order)
    return b.compose(inner) * log_derivative_term(assoc, beta)


def beta_u_row(a: TruncatedSeries, beta: Any, n: int) -> Polynomial:
    """(beta)u_n(x) = x u~_n(x + n beta)"""
    if n == 0:
        return Polynomial.one()
    rows = _u_tilde_rows(a, n)
    return rows[n].shift(n * Fraction(beta)).mul_x()


def q_column(q: TruncatedSeries, n: int, order: int) -> TruncatedSeries:
    """Colonna n di (1, q)_{e^x}"""
    power = q.truncate(order) ** n
    scale = factorial(n)
    return TruncatedSeries(
        [c * Fraction(factorial(k), scale) for k, c in enumerate(power.coeffs)], order
    )


def dual_basis_residual(a: TruncatedSeries, beta: Any, phi: Any, order: int) -> TruncatedSeries:
    """sum (beta)u_n(phi) (beta)q_n(x) - 1/(1 - phi x) fino a x^order"""
    beta, phi = Fraction(beta), Fraction(phi)
    if a.order < order:
        raise SeriesError(f"base order {a.order} below requested {order}")
    q = a.truncate(order).log().reversion()
    x = TruncatedSeries.x(order)
    total = TruncatedSeries.constant(0, order)
    for n in range(order + 1):
        column = q_column(q, n, order)
        shift = n * beta
        if shift != 0:
            damping = TruncatedSeries.geometric(-shift, order)
            column = damping * column.compose(x * damping)
        total = total + column * beta_u_row(a, beta, n)(phi)
    return total - TruncatedSeries.geometric(phi, order)


def inverse_pair_check(a: TruncatedSeries, phi: Any, beta: Any, order: int) -> bool:
    """(1, x (beta)a^phi)^(-1) = (1, x (beta-phi)a^(-phi)) e la variante con prefattore"""
    beta, phi = Fraction(beta), Fraction(phi)
    x = TruncatedSeries.x(order)
    forward = lagrange_associate(a, beta, phi, order).mul_x().truncate(order)
    backward = lagrange_associate(a, beta - phi, -phi, order).mul_x().truncate(order)
    if not forward.compose(backward).agrees_with(x) or not backward.compose(forward).agrees_with(x):
        return False

    head = log_derivative_term(lagrange_associate(a, beta, 1, order), phi)
    tail = log_derivative_term(lagrange_associate(a, beta - phi, 1, order), -phi)
    one = TruncatedSeries.constant(1, order)
    return (head * tail.compose(forward)).agrees_with(one)


def functional_equation_residuals(
    a: TruncatedSeries, beta: Any, order: Optional[int] = None
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """(beta)a(x a^-beta) - a  e  a(x (beta)a^beta) - (beta)a"""
    beta = Fraction(beta)
    order = a.order if order is None else order
    base = a.truncate(order)
    assoc = lagrange_associate(a, beta, 1, order)
    first = assoc.compose(base.pow_rational(-beta).mul_x().truncate(order)) - base
    second = base.compose(lagrange_associate(a, beta, beta, order).mul_x().truncate(order)) - assoc
    return first, second


def extraction_law_holds(a: TruncatedSeries, beta: Any, phi: Any, n: int) -> bool:
    """[x^n](beta)a^phi = phi/(phi + beta n) [x^n] a^(phi + beta n), per phi + beta n != 0"""
    beta, phi = Fraction(beta), Fraction(phi)
    total = phi + beta * n
    if total == 0:
        return True
    left = lagrange_associate(a, beta, phi, n)[n]
    right = phi / total * a.truncate(n).pow_rational(total)[n]
    return left == right
