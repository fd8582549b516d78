# arrays/riordan.py
"""Array di Riordan ordinari, esponenziali e quadrati; estrazione dei polinomi numeratori."""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Tuple

from algebra.exact_core import (
    ArgumentError,
    Polynomial,
    SeriesError,
    rat_binomial,
    rising_factorial,
)
from algebra.series import DEFAULT_GUARD, TruncatedSeries, default_order, sheffer_rows
from arrays.lagrange import generalized_binomial
from arrays.operator import FiniteOperator

logger = logging.getLogger(__name__)


class ArrayFlavor(Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class SeriesPair:
    """Dati (b(x), a(x)) di un array quadrato: colonna m = b a^m"""
    b: TruncatedSeries
    a: TruncatedSeries

    def __post_init__(self):
        if self.b[0] == 0:
            raise SeriesError("pair needs b(0) != 0")
        if self.a[0] != 1:
            raise SeriesError("pair needs a(0) = 1")

    @classmethod
    def plain(cls, a: TruncatedSeries) -> "SeriesPair":
        """Coppia (1, a)"""
        return cls(TruncatedSeries.constant(1, a.order), a)

    @property
    def order(self) -> int:
        return min(self.b.order, self.a.order)


@dataclass(frozen=True)
class NumeratorResult:
    """Numeratore g_n con diagonale g_n(x)/(1-x)^e"""
    numerator: Polynomial
    denominator_exponent: int
    index: int
    residual_ok: bool
    residual: Tuple[Tuple[int, Fraction], ...] = field(default=())

    def to_dict(self) -> Dict[str, object]:
        return {
            "index": self.index,
            "denominator_exponent": self.denominator_exponent,
            "residual_ok": self.residual_ok,
            "residual": [[k, str(v)] for k, v in self.residual],
        }


# --- catalogo delle serie con nome ---------------------------------------------

def exp_series(order: int, c: Fraction = Fraction(1)) -> TruncatedSeries:
    """e^(c x)"""
    return TruncatedSeries([Fraction(c) ** k / factorial(k) for k in range(order + 1)], order)


def geometric_series(order: int, c: Fraction = Fraction(1)) -> TruncatedSeries:
    """1/(1 - c x)"""
    return TruncatedSeries.geometric(Fraction(c), order)


def one_plus_x(order: int) -> TruncatedSeries:
    return TruncatedSeries([1, 1], order)


def catalan_series(order: int) -> TruncatedSeries:
    """C(x) = sum C(2n, n)/(n+1) x^n"""
    return TruncatedSeries([Fraction(comb(2 * n, n), n + 1) for n in range(order + 1)], order)


def genbinom_series(order: int, beta: Fraction) -> TruncatedSeries:
    return generalized_binomial(Fraction(beta), Fraction(1), order)


CATALOG: Dict[str, Callable[..., TruncatedSeries]] = {
    "exp": exp_series,
    "geom": geometric_series,
    "onepx": one_plus_x,
    "catalan": catalan_series,
    "genbinom": genbinom_series,
}

# nome -> (argomento ammesso, argomento obbligatorio)
CATALOG_ARGUMENTS: Dict[str, Tuple[bool, bool]] = {
    "exp": (True, False),
    "geom": (True, False),
    "onepx": (False, False),
    "catalan": (False, False),
    "genbinom": (True, True),
}


def catalog_series(name: str, order: int, arg: Optional[Fraction] = None) -> TruncatedSeries:
    """Serie del catalogo per nome"""
    if name not in CATALOG:
        raise ArgumentError(f"unknown series name {name!r}")
    accepts, requires = CATALOG_ARGUMENTS[name]
    if arg is None and requires:
        raise ArgumentError(f"series {name!r} needs a rational argument")
    if arg is not None and not accepts:
        raise ArgumentError(f"series {name!r} takes no argument")
    builder = CATALOG[name]
    return builder(order) if arg is None else builder(order, Fraction(arg))


# --- colonne, righe, diagonali ----------------------------------------------------

def column(pair: SeriesPair, flavor: ArrayFlavor, m: int, triangular: bool = False) -> TruncatedSeries:
    """Colonna m di (b, a) oppure, se triangular, dell'array di Riordan (b, x a)"""
    if m < 0:
        raise ArgumentError(f"column index must be >= 0, got {m}")
    order = pair.order
    series = pair.b.truncate(order) * (pair.a.truncate(order) ** m)
    if triangular:
        series = series.mul_x(m)
    if flavor is ArrayFlavor.EXPONENTIAL:
        scale = factorial(m)
        series = TruncatedSeries(
            [c * Fraction(factorial(k), scale) for k, c in enumerate(series.coeffs)], series.order
        )
    return series


def entry_grid(pair: SeriesPair, flavor: ArrayFlavor, size: int, triangular: bool = True) -> FiniteOperator:
    """Materializza le prime size x size entrate dell'array"""
    if pair.order < size - 1:
        raise SeriesError(f"pair order {pair.order} too small for {size} rows")
    columns = []
    for m in range(size):
        col = column(pair, flavor, m, triangular)
        columns.append(Polynomial(col[k] for k in range(size)))
    return FiniteOperator.from_columns(columns, size)


def square_row(pair: SeriesPair, n: int) -> Polynomial:
    """[n,->](b, a - 1): w_n (v_n se b = 1)"""
    if n < 0:
        raise ArgumentError(f"row index must be >= 0, got {n}")
    if pair.order < n:
        raise SeriesError(f"pair order {pair.order} too small for row {n}")
    b = pair.b.truncate(n)
    shifted = pair.a.truncate(n) - 1
    power = TruncatedSeries.constant(1, n)
    coeffs = []
    for _ in range(n + 1):
        coeffs.append((b * power)[n])
        power = power * shifted
    return Polynomial(coeffs)


@lru_cache(maxsize=256)
def _pair_rows(pair: SeriesPair, n: int) -> Tuple[Polynomial, ...]:
    if pair.order < n:
        raise SeriesError(f"pair order {pair.order} too small for sheffer row {n}")
    logger.debug("sheffer rows up to %d", n)
    return tuple(sheffer_rows(pair.b.truncate(n), pair.a.truncate(n).log(), n))


def sheffer_row(pair: SeriesPair, n: int) -> Polynomial:
    """s_n di (b, log a)"""
    return _pair_rows(pair, n)[n]


def sheffer_u_row(a: TruncatedSeries, n: int) -> Polynomial:
    """u_n di (1, log a)"""
    return sheffer_row(SeriesPair.plain(a), n)


def diagonal_series(pair: SeriesPair, flavor: ArrayFlavor, n: int, order: Optional[int] = None) -> TruncatedSeries:
    """[n,↘](b, x a): sum s_n(m)/n! x^m, con fattore [m+1]_n nel caso esponenziale"""
    if n < 0:
        raise ArgumentError(f"diagonal index must be >= 0, got {n}")
    order = default_order(n) if order is None else order
    s_n = sheffer_row(pair, n)
    scale = factorial(n)
    coeffs = []
    for m in range(order + 1):
        value = s_n(Fraction(m)) / scale
        if flavor is ArrayFlavor.EXPONENTIAL:
            value *= rising_factorial(m + 1, n)
        coeffs.append(value)
    return TruncatedSeries(coeffs, order)


def denominator_exponent(flavor: ArrayFlavor, n: int) -> int:
    return n + 1 if flavor is ArrayFlavor.ORDINARY else 2 * n + 1


def numerator(
    pair: SeriesPair,
    flavor: ArrayFlavor,
    n: int,
    order: Optional[int] = None,
    guard: int = DEFAULT_GUARD,
) -> NumeratorResult:
    """Numeratore della diagonale n: (1-x)^e per la serie diagonale, con certificato sul residuo"""
    order = default_order(n, guard) if order is None else order
    if order <= n:
        raise SeriesError(f"order {order} leaves no residual window for n={n}")
    exponent = denominator_exponent(flavor, n)
    diagonal = diagonal_series(pair, flavor, n, order)
    factor = TruncatedSeries.from_polynomial(Polynomial([1, -1]) ** exponent, order)
    product = diagonal * factor
    residual = tuple((k, product[k]) for k in range(n + 1, order + 1) if product[k] != 0)
    if residual:
        logger.warning("⚠️  numerator n=%d (%s) has %d nonzero residual coefficients",
                       n, flavor.value, len(residual))
    return NumeratorResult(
        numerator=Polynomial(product.coeffs[: n + 1]),
        denominator_exponent=exponent,
        index=n,
        residual_ok=not residual,
        residual=residual,
    )


# --- famiglie classiche -------------------------------------------------------------

@lru_cache(maxsize=None)
def euler_poly(n: int) -> Polynomial:
    """A_n(x) = n! per il numeratore ordinario di e^x"""
    if n < 0:
        raise ArgumentError(f"euler polynomial index must be >= 0, got {n}")
    pair = SeriesPair.plain(exp_series(default_order(n)))
    return numerator(pair, ArrayFlavor.ORDINARY, n).numerator * factorial(n)


def narayana_poly(n: int) -> Polynomial:
    """N_n(x) = (1/n) sum C(n, m-1) C(n, n-m) x^m, N_0 = 1"""
    if n < 0:
        raise ArgumentError(f"narayana index must be >= 0, got {n}")
    if n == 0:
        return Polynomial.one()
    return Polynomial(
        [0] + [Fraction(comb(n, m - 1) * comb(n, n - m), n) for m in range(1, n + 1)]
    )


def narayana_b_poly(n: int) -> Polynomial:
    """^B N_n(x) = sum C(n, m)^2 x^m"""
    if n < 0:
        raise ArgumentError(f"narayana index must be >= 0, got {n}")
    return Polynomial([comb(n, m) ** 2 for m in range(n + 1)])


def pascal_power(phi: Fraction, size: int) -> FiniteOperator:
    """P^phi = (1/(1 - phi x), x/(1 - phi x)) troncata"""
    if size < 1:
        raise ArgumentError(f"pascal size must be >= 1, got {size}")
    phi = Fraction(phi)
    return FiniteOperator(
        [[comb(i, j) * phi ** (i - j) if i >= j else 0 for j in range(size)] for i in range(size)]
    )


# --- varianti di tipo B e array inversi ------------------------------------------------

def log_derivative_prefactor(a: TruncatedSeries) -> TruncatedSeries:
    """1 + x (log a)'"""
    return a.log().derivative().mul_x() + 1


def derivative_pair(a: TruncatedSeries) -> SeriesPair:
    """((x a)', a): array ((x a)', x a)"""
    return SeriesPair(a.mul_x().derivative(), a.truncate(a.order))


def type_b_gep(a: TruncatedSeries, n: int, guard: int = DEFAULT_GUARD) -> NumeratorResult:
    """^B alpha_n: numeratori ordinari di ((x a)', x a)"""
    return numerator(derivative_pair(a), ArrayFlavor.ORDINARY, n, guard=guard)


def type_b_gnp(a: TruncatedSeries, n: int, guard: int = DEFAULT_GUARD) -> NumeratorResult:
    """^B phi_n: numeratori esponenziali di (a, x a)"""
    return numerator(SeriesPair(a, a), ArrayFlavor.EXPONENTIAL, n, guard=guard)


def inverse_series(a: TruncatedSeries) -> TruncatedSeries:
    """a' con (1, x a)^(-1) = (1, x a')"""
    return a.mul_x().reversion().div_x()


def log_derivative_pair(a: TruncatedSeries) -> SeriesPair:
    """(1 + x(log a)', a); la sua inversa e' log_derivative_pair(inverse_series(a))"""
    return SeriesPair(log_derivative_prefactor(a), a)


# --- funzione generatrice dei GNP ------------------------------------------------------

def gnp_generating_series(a: TruncatedSeries, n_max: int) -> TruncatedSeries:
    """c(x) = (1-t) b(x(1-t)^2) su Q[t], con x c(x) reversione di z(1 - t sum a_k (1-t)^(k-1) z^k)"""
    if a[0] != 1:
        raise SeriesError("generating check needs a(0) = 1")
    if a.order < n_max:
        raise SeriesError(f"series order {a.order} too small for n_max={n_max}")
    t = Polynomial.x()
    one_minus_t = Polynomial([1, -1])
    coeffs: List[object] = [Fraction(0), Fraction(1)]
    for k in range(1, n_max + 1):
        coeffs.append(-(t * a[k]) * one_minus_t ** (k - 1))
    return TruncatedSeries(coeffs, n_max + 1).reversion().div_x()


def narayana_closed_form_series(order: int) -> TruncatedSeries:
    """(1 + x(1-t) - sqrt(1 - 2x(1+t) + x^2(1-t)^2)) / (2x) su Q[t]"""
    t = Polynomial.x()
    one_minus_t = Polynomial([1, -1])
    radicand = TruncatedSeries([1, -2 * (1 + t), one_minus_t ** 2], order + 1)
    root = radicand.pow_rational(Fraction(1, 2))
    head = TruncatedSeries([1, one_minus_t], order + 1)
    return (head - root).div_x() / 2


def gnp_generating_check(a: TruncatedSeries, n_max: int, guard: int = DEFAULT_GUARD) -> bool:
    """sum phi_n(t) x^n/(n+1)! = (1-t) b(x(1-t)^2) fino a x^n_max"""
    generating = gnp_generating_series(a, n_max)
    pair = SeriesPair.plain(a.truncate(n_max))
    for n in range(n_max + 1):
        result = numerator(pair, ArrayFlavor.EXPONENTIAL, n, guard=guard)
        if not result.residual_ok:
            return False
        coefficient = generating[n]
        if not isinstance(coefficient, Polynomial):
            coefficient = Polynomial([coefficient])
        if coefficient.degree > n:
            return False
        if coefficient != result.numerator / factorial(n + 1):
            logger.debug("generating function mismatch at n=%d", n)
            return False
    return True


def rat_binomial_series(c: Fraction, order: int) -> TruncatedSeries:
    """(1 + x)^c via binomiali generalizzati"""
    return TruncatedSeries([rat_binomial(Fraction(c), k) for k in range(order + 1)], order)
