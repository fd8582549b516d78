# arrays/transforms.py
"""Famiglie di operatori finiti: costruzione per definizione, per fattorizzazione e per colonne chiuse."""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Callable, Dict, Optional, Union

from algebra.exact_core import (
    ArgumentError,
    OperatorError,
    Polynomial,
    binomial_sum,
    falling_poly,
    rat_binomial,
    rising_poly,
    t_poly,
)
from algebra.series import TruncatedSeries
from arrays.operator import FiniteOperator, product
from arrays.riordan import euler_poly, pascal_power, rat_binomial_series

logger = logging.getLogger(__name__)


class MatrixTag(Enum):
    U = "U"
    UINV = "Uinv"
    UT = "Ut"
    UTINV = "Utinv"
    V = "V"
    VINV = "Vinv"
    VT = "Vt"
    VTINV = "Vtinv"
    F = "F"
    FINV = "Finv"
    FT = "Ft"
    FTINV = "Ftinv"
    BF = "BF"
    BFINV = "BFinv"
    S = "S"
    SINV = "Sinv"
    ST = "St"
    STINV = "Stinv"
    C = "C"
    CT = "Ct"
    DT = "Dt"
    J = "J"
    JT = "Jt"
    E = "E"
    X = "X"
    A = "A"
    G = "G"
    H = "H"
    T = "T"
    I = "I"  # noqa: E741
    IT = "It"
    R = "R"


# Famiglia tilde: agisce sui polinomi di grado < n
TILDE_TAGS = frozenset({
    MatrixTag.UT, MatrixTag.UTINV, MatrixTag.VT, MatrixTag.VTINV, MatrixTag.FT,
    MatrixTag.FTINV, MatrixTag.ST, MatrixTag.STINV, MatrixTag.CT, MatrixTag.DT,
    MatrixTag.JT, MatrixTag.IT, MatrixTag.A, MatrixTag.T,
})

BETA_TAGS = frozenset({MatrixTag.A, MatrixTag.G, MatrixTag.H, MatrixTag.T, MatrixTag.E})

INVERSE_TAGS = {
    MatrixTag.U: MatrixTag.UINV, MatrixTag.UT: MatrixTag.UTINV,
    MatrixTag.V: MatrixTag.VINV, MatrixTag.VT: MatrixTag.VTINV,
    MatrixTag.F: MatrixTag.FINV, MatrixTag.FT: MatrixTag.FTINV,
    MatrixTag.BF: MatrixTag.BFINV, MatrixTag.S: MatrixTag.SINV,
    MatrixTag.ST: MatrixTag.STINV,
}
INVERSE_TAGS.update({v: k for k, v in list(INVERSE_TAGS.items())})
SELF_INVERSE_TAGS = frozenset({MatrixTag.J, MatrixTag.JT, MatrixTag.I, MatrixTag.IT, MatrixTag.R})

_TILDE_ALIASES = {
    "Utilde": "Ut", "Utildeinv": "Utinv", "Vtilde": "Vt", "Vtildeinv": "Vtinv",
    "Ftilde": "Ft", "Ftildeinv": "Ftinv", "Stilde": "St", "Stildeinv": "Stinv",
    "Ctilde": "Ct", "Dtilde": "Dt", "Jtilde": "Jt", "Itilde": "It",
}


def parse_tag(token: str) -> MatrixTag:
    """Token CLI (con alias "tilde") -> MatrixTag"""
    token = _TILDE_ALIASES.get(token, token)
    try:
        return MatrixTag(token)
    except ValueError:
        raise OperatorError(f"unknown matrix name {token!r}") from None


@dataclass(frozen=True)
class MatrixName:
    tag: MatrixTag
    n: int
    beta: Optional[Fraction] = None

    def __post_init__(self):
        if not isinstance(self.tag, MatrixTag):
            object.__setattr__(self, "tag", parse_tag(str(self.tag)))
        if not isinstance(self.n, int) or self.n < (1 if self.tag in TILDE_TAGS else 0):
            raise OperatorError(f"invalid n={self.n!r} for {self.tag.value}")
        if self.tag in BETA_TAGS:
            object.__setattr__(self, "beta", Fraction(1) if self.beta is None else Fraction(self.beta))
        elif self.beta is not None:
            raise OperatorError(f"{self.tag.value} takes no beta parameter")

    @property
    def dim(self) -> int:
        return self.n if self.tag in TILDE_TAGS else self.n + 1

    def label(self) -> str:
        text = f"{self.tag.value}_{self.n}"
        return text if self.beta is None else f"{text}^{self.beta}"


# --- operatori elementari ------------------------------------------------------------

def multiplication(f: Union[TruncatedSeries, Polynomial], rows: int, cols: int) -> FiniteOperator:
    """Moltiplicazione per f, troncata a rows x cols: entry(i, j) = [x^(i-j)] f"""
    def coefficient(k: int) -> Fraction:
        return f[k] if k >= 0 else Fraction(0)
    return FiniteOperator([[coefficient(i - j) for j in range(cols)] for i in range(rows)])


def shift_operator(c: Any, dim: int) -> FiniteOperator:
    """E^c x^k = (x + c)^k"""
    step = Polynomial([Fraction(c), 1])
    return FiniteOperator.from_columns([step ** k for k in range(dim)], dim)


def reflection(dim: int) -> FiniteOperator:
    """(1, -x)"""
    return FiniteOperator.diagonal([(-1) ** p for p in range(dim)])


def reversal(dim: int) -> FiniteOperator:
    return FiniteOperator([[int(i + j == dim - 1) for j in range(dim)] for i in range(dim)])


def raising(dim: int) -> FiniteOperator:
    """(x, x): x^p -> x^(p+1), da grado < dim a grado <= dim"""
    return FiniteOperator([[int(i == j + 1) for j in range(dim)] for i in range(dim + 1)])


def lowering(dim: int) -> FiniteOperator:
    """(x, x)^T: x^p -> x^(p-1), x^0 -> 0"""
    return raising(dim).transpose()


def inclusion(dim: int) -> FiniteOperator:
    """I_(dim-1) visto come mappa da grado < dim a grado <= dim"""
    return FiniteOperator([[int(i == j) for j in range(dim)] for i in range(dim + 1)])


def binomial_transpose(c: Any, dim: int) -> FiniteOperator:
    """((1 + x)^c, x)^T troncata a dim"""
    return multiplication(rat_binomial_series(Fraction(c), dim), dim, dim).transpose()


def _one_minus_x(k: int) -> Polynomial:
    return Polynomial([1, -1]) ** k


# --- definizioni ---------------------------------------------------------------------

def _ut(n: int) -> FiniteOperator:
    scale = Fraction(1, factorial(n))
    return FiniteOperator.from_columns(
        [_one_minus_x(n - 1 - p) * euler_poly(p + 1).div_x() * scale for p in range(n)], n
    )


def _ut_inv(n: int) -> FiniteOperator:
    return FiniteOperator.from_columns(
        [falling_poly(p).shift(-1) * rising_poly(n - p - 1).shift(1) for p in range(n)], n
    )


def _u(n: int) -> FiniteOperator:
    scale = Fraction(1, factorial(n))
    return FiniteOperator.from_columns(
        [_one_minus_x(n - p) * euler_poly(p) * scale for p in range(n + 1)], n + 1
    )


def _u_inv(n: int) -> FiniteOperator:
    return FiniteOperator.from_columns(
        [falling_poly(p) * rising_poly(n - p).shift(1) for p in range(n + 1)], n + 1
    )


def _v_inv(n: int) -> FiniteOperator:
    return FiniteOperator.from_columns([_one_minus_x(n - p).mul_x(p) for p in range(n + 1)], n + 1)


def _vt_inv(n: int) -> FiniteOperator:
    return FiniteOperator.from_columns([_one_minus_x(n - 1 - p).mul_x(p) for p in range(n)], n)


def _weighted_moment_column(n: int, p: int, start: int, power_shift: int, extra: int) -> Polynomial:
    """(1-x)^(2n+1) sum_{m>=start} (m+extra)^(p+power_shift) C(m+n, n) x^(m-start), gradi <= n"""
    terms = Polynomial(
        [(m + extra) ** (p + power_shift) * comb(m + n, n) for m in range(start, start + n + 1)]
    )
    full = _one_minus_x(2 * n + 1) * terms
    return Polynomial(full[k] for k in range(n + 1))


def _f(n: int) -> FiniteOperator:
    return FiniteOperator.from_columns(
        [_weighted_moment_column(n, p, 0, 0, 0) for p in range(n + 1)], n + 1
    )


def _f_inv(n: int) -> FiniteOperator:
    scale = Fraction(factorial(n), factorial(2 * n))
    return FiniteOperator.from_columns(
        [falling_poly(p) * rising_poly(n - p).shift(n + 1) * scale for p in range(n + 1)], n + 1
    )


def _ft(n: int) -> FiniteOperator:
    lift = multiplication(rising_poly(n).shift(1), 2 * n, n)
    full = build(MatrixName(MatrixTag.UT, 2 * n)) @ lift * Fraction(factorial(2 * n), factorial(n))
    tail = full.to_rows()[n:]
    if any(value != 0 for row in tail for value in row):
        raise OperatorError(f"Ft_{n}: image leaves the degree < {n} space")
    return full.block(n, n)


def _ft_inv(n: int) -> FiniteOperator:
    scale = Fraction(factorial(n), factorial(2 * n))
    return FiniteOperator.from_columns(
        [falling_poly(p).shift(-1) * rising_poly(n - p - 1).shift(n + 1) * scale for p in range(n)], n
    )


def _bf_inv(n: int) -> FiniteOperator:
    scale = Fraction(factorial(n), factorial(2 * n))
    return FiniteOperator.from_columns(
        [falling_poly(p).shift(-1) * rising_poly(n - p).shift(n) * scale for p in range(n + 1)], n + 1
    )


def _lowering_square(dim: int) -> FiniteOperator:
    return FiniteOperator([[int(j == i + 1) for j in range(dim)] for i in range(dim)])


def _conjugated_shift(outer: MatrixTag, inner_dim: int, name: MatrixName) -> FiniteOperator:
    left = build(MatrixName(outer, name.n))
    right = build(MatrixName(INVERSE_TAGS[outer], name.n))
    return left @ shift_operator(name.n * name.beta, inner_dim) @ right


def _build_uncached(name: MatrixName) -> FiniteOperator:
    n, tag = name.n, name.tag
    if tag is MatrixTag.UT:
        return _ut(n)
    if tag is MatrixTag.UTINV:
        return _ut_inv(n)
    if tag is MatrixTag.U:
        return _u(n)
    if tag is MatrixTag.UINV:
        return _u_inv(n)
    if tag is MatrixTag.VT:
        return reversal(n) @ shift_operator(1, n) @ reversal(n)
    if tag is MatrixTag.VTINV:
        return _vt_inv(n)
    if tag is MatrixTag.V:
        return reversal(n + 1) @ shift_operator(1, n + 1) @ reversal(n + 1)
    if tag is MatrixTag.VINV:
        return _v_inv(n)
    if tag is MatrixTag.F:
        return _f(n)
    if tag is MatrixTag.FINV:
        return _f_inv(n)
    if tag is MatrixTag.FT:
        return _ft(n)
    if tag is MatrixTag.FTINV:
        return _ft_inv(n)
    if tag is MatrixTag.BF:
        return build(MatrixName(MatrixTag.F, n)) @ shift_operator(1, n + 1)
    if tag is MatrixTag.BFINV:
        return _bf_inv(n)
    if tag is MatrixTag.S:
        return build(MatrixName(MatrixTag.F, n)) @ build(MatrixName(MatrixTag.UINV, n))
    if tag is MatrixTag.SINV:
        return build(MatrixName(MatrixTag.U, n)) @ build(MatrixName(MatrixTag.FINV, n))
    if tag is MatrixTag.ST:
        return build(MatrixName(MatrixTag.FT, n)) @ build(MatrixName(MatrixTag.UTINV, n))
    if tag is MatrixTag.STINV:
        return build(MatrixName(MatrixTag.UT, n)) @ build(MatrixName(MatrixTag.FTINV, n))
    if tag is MatrixTag.C:
        return FiniteOperator.diagonal(
            [Fraction(factorial(n + p), factorial(p)) for p in range(n + 1)]
        )
    if tag is MatrixTag.CT:
        return FiniteOperator.diagonal(
            [Fraction(factorial(n + p + 1), factorial(p + 1)) for p in range(n)]
        )
    if tag is MatrixTag.DT:
        return FiniteOperator.diagonal([p + 1 for p in range(n)])
    if tag is MatrixTag.J:
        return reversal(n + 1)
    if tag is MatrixTag.JT:
        return reversal(n)
    if tag is MatrixTag.I:
        return FiniteOperator.identity(n + 1)
    if tag is MatrixTag.IT:
        return FiniteOperator.identity(n)
    if tag is MatrixTag.R:
        return reflection(n + 1)
    if tag is MatrixTag.E:
        return shift_operator(name.beta, n + 1)
    if tag is MatrixTag.X:
        v = build(MatrixName(MatrixTag.V, n))
        return build(MatrixName(MatrixTag.VINV, n)) @ _lowering_square(n + 1) @ v
    if tag is MatrixTag.A:
        return _conjugated_shift(MatrixTag.UT, n, name)
    if tag is MatrixTag.G:
        return _conjugated_shift(MatrixTag.U, n + 1, name)
    if tag is MatrixTag.H:
        return _conjugated_shift(MatrixTag.F, n + 1, name)
    if tag is MatrixTag.T:
        return _conjugated_shift(MatrixTag.FT, n, name)
    raise OperatorError(f"no construction for {tag.value}")


@lru_cache(maxsize=None)
def build(name: MatrixName) -> FiniteOperator:
    """Operatore esatto per definizione"""
    logger.debug("build %s", name.label())
    return _build_uncached(name)


def apply(operator: FiniteOperator, p: Polynomial) -> Polynomial:
    return operator.apply(p)


def inverse_name(name: MatrixName) -> MatrixName:
    """Nome dell'operatore inverso (beta -> -beta per le famiglie coniugate)"""
    if name.tag in INVERSE_TAGS:
        return MatrixName(INVERSE_TAGS[name.tag], name.n)
    if name.tag in BETA_TAGS:
        return MatrixName(name.tag, name.n, -name.beta)
    if name.tag in SELF_INVERSE_TAGS:
        return name
    raise OperatorError(f"{name.tag.value} has no named inverse")


# --- seconda costruzione --------------------------------------------------------------

def _u_moment_column(n: int, p: int, tilde: bool) -> Polynomial:
    """(1/n!)(1-x)^(n+1) sum m^p x^m, oppure sum m^(p+1) x^(m-1) per la versione tilde"""
    dim = n if tilde else n + 1
    if tilde:
        terms = Polynomial([(m + 1) ** (p + 1) for m in range(dim)])
    else:
        terms = Polynomial([m ** p for m in range(dim)])
    full = _one_minus_x(n + 1) * terms / factorial(n)
    return Polynomial(full[k] for k in range(dim))


def factorized(name: MatrixName) -> FiniteOperator:
    """Costruzione indipendente: fattorizzazioni, formule di colonna o inversione diretta"""
    n, tag, beta = name.n, name.tag, name.beta
    op = lambda t, k=n: build(MatrixName(t, k))  # noqa: E731

    if tag is MatrixTag.UT:
        return FiniteOperator.from_columns([_u_moment_column(n, p, True) for p in range(n)], n)
    if tag is MatrixTag.U:
        return FiniteOperator.from_columns([_u_moment_column(n, p, False) for p in range(n + 1)], n + 1)
    if tag is MatrixTag.VT:
        return FiniteOperator.from_columns(
            [(Polynomial([1, 1]) ** (n - p - 1)).mul_x(p) for p in range(n)], n
        )
    if tag is MatrixTag.V:
        return FiniteOperator.from_columns(
            [(Polynomial([1, 1]) ** (n - p)).mul_x(p) for p in range(n + 1)], n + 1
        )
    if tag is MatrixTag.F:
        lift = multiplication(rising_poly(n).shift(1), 2 * n + 1, n + 1)
        full = op(MatrixTag.U, 2 * n) @ lift * Fraction(factorial(2 * n), factorial(n))
        return full.block(n + 1, n + 1)
    if tag is MatrixTag.FT:
        return FiniteOperator.from_columns(
            [_weighted_moment_column(n, p, 1, 1, 0) for p in range(n)], n
        )
    if tag is MatrixTag.BF:
        return FiniteOperator.from_columns(
            [_weighted_moment_column(n, p, 0, 0, 1) for p in range(n + 1)], n + 1
        )
    if tag is MatrixTag.S:
        return op(MatrixTag.VINV) @ op(MatrixTag.C) @ op(MatrixTag.V)
    if tag is MatrixTag.ST:
        return op(MatrixTag.VTINV) @ op(MatrixTag.CT) @ op(MatrixTag.VT)
    if tag is MatrixTag.E:
        return pascal_power(beta, n + 1).transpose()
    if tag is MatrixTag.X:
        first = (Polynomial([1, -1]) - _one_minus_x(n + 1)).div_x()
        rest = [Polynomial([1, -1]).mul_x(p - 1) for p in range(1, n + 1)]
        return FiniteOperator.from_columns([first] + rest, n + 1)
    if tag is MatrixTag.A:
        dt = op(MatrixTag.DT)
        return product([op(MatrixTag.VTINV), dt, binomial_transpose(n * beta, n),
                        dt.inverse(), op(MatrixTag.VT)])
    if tag is MatrixTag.G:
        return op(MatrixTag.VINV) @ binomial_transpose(n * beta, n + 1) @ op(MatrixTag.V)
    if tag is MatrixTag.H:
        c = op(MatrixTag.C)
        return product([op(MatrixTag.VINV), c, binomial_transpose(n * beta, n + 1),
                        c.inverse(), op(MatrixTag.V)])
    if tag is MatrixTag.T:
        weight = op(MatrixTag.CT) @ op(MatrixTag.DT)
        return product([op(MatrixTag.VTINV), weight, binomial_transpose(n * beta, n),
                        weight.inverse(), op(MatrixTag.VT)])
    if tag in INVERSE_TAGS and tag.value.endswith("inv"):
        return build(MatrixName(INVERSE_TAGS[tag], n)).inverse()
    raise OperatorError(f"{tag.value} has no second construction")


def conjugated_by_s(name: MatrixName) -> FiniteOperator:
    """H = S G S^(-1), T = S~ A S~^(-1)"""
    if name.tag is MatrixTag.H:
        s, inner = MatrixTag.S, MatrixTag.G
    elif name.tag is MatrixTag.T:
        s, inner = MatrixTag.ST, MatrixTag.A
    else:
        raise OperatorError(f"{name.tag.value} is not an S-conjugate")
    left = build(MatrixName(s, name.n))
    return left @ build(MatrixName(inner, name.n, name.beta)) @ build(MatrixName(INVERSE_TAGS[s], name.n))


# --- colonne in forma chiusa -----------------------------------------------------------

def _s_column(n: int, p: int) -> Polynomial:
    scale = Fraction(factorial(n + p) * factorial(n - p), factorial(n))
    return binomial_sum([(m, scale * comb(n, m - p) * comb(n, n - m)) for m in range(p, n + 1)])


def _s_inv_column(n: int, p: int) -> Polynomial:
    scale = Fraction(factorial(p) * factorial(n - p), factorial(2 * n))
    return binomial_sum(
        [(m, scale * rat_binomial(-n, m - p) * comb(2 * n, n - m)) for m in range(p, n + 1)]
    )


def _g_column(n: int, p: int, beta: Fraction) -> Polynomial:
    nb = n * beta
    return binomial_sum(
        [(m, rat_binomial(-nb + p, m) * rat_binomial(nb + n - p, n - m)) for m in range(n + 1)]
    )


def _h_column(n: int, p: int, beta: Fraction) -> Polynomial:
    nb = n * beta
    total = Polynomial.zero()
    for m in range(p, n + 1):
        weight = Fraction(comb(n - p, n - m), comb(n + m, m))
        total = total + _one_minus_x(n - m) * t_poly(-nb + n + m, nb, m) * weight
    return total


def _t_column(n: int, p: int, beta: Fraction) -> Polynomial:
    nb = n * beta
    total = Polynomial.zero()
    for m in range(p, n):
        weight = Fraction(comb(n - 1 - p, n - 1 - m), comb(n + 1 + m, m))
        total = total + _one_minus_x(n - m - 1) * t_poly(-nb + n + m + 1, nb, m) * weight
    return total


def _h_corner(n: int, p: int, beta: Fraction) -> Optional[Polynomial]:
    nb = n * beta
    scale = Fraction(1, comb(2 * n, n))
    if p == n:
        return binomial_sum(
            [(m, scale * rat_binomial(-nb + 2 * n, m) * rat_binomial(nb, n - m)) for m in range(n + 1)]
        )
    if p == 0:
        return binomial_sum(
            [(m, scale * rat_binomial(-nb, m) * rat_binomial(nb + 2 * n, n - m)) for m in range(n + 1)]
        )
    return None


def _t_corner(n: int, p: int, beta: Fraction) -> Optional[Polynomial]:
    nb = n * beta
    scale = Fraction(1, comb(2 * n, n - 1))
    if p == n - 1:
        return binomial_sum(
            [(m, scale * rat_binomial(n * (2 - beta), m) * rat_binomial(nb, n - 1 - m)) for m in range(n)]
        )
    if p == 0:
        return binomial_sum(
            [(m, scale * rat_binomial(-nb, m) * rat_binomial(n * (2 + beta), n - 1 - m)) for m in range(n)]
        )
    return None


CLOSED_FORMS: Dict[MatrixTag, Callable[..., Polynomial]] = {
    MatrixTag.S: lambda n, p, beta: _s_column(n, p),
    MatrixTag.SINV: lambda n, p, beta: _s_inv_column(n, p),
    MatrixTag.G: _g_column,
    MatrixTag.H: _h_column,
    MatrixTag.T: _t_column,
}

CORNER_FORMS: Dict[MatrixTag, Callable[..., Optional[Polynomial]]] = {
    MatrixTag.H: _h_corner,
    MatrixTag.T: _t_corner,
}


def closed_form_column(name: MatrixName, p: int, use_corner: bool = False) -> Polynomial:
    """Colonna p calcolata solo da somme di binomiali"""
    if name.tag not in CLOSED_FORMS:
        raise OperatorError(f"{name.tag.value} has no closed-form columns")
    if not 0 <= p < name.dim:
        raise ArgumentError(f"column {p} out of range for {name.label()}")
    if use_corner:
        if name.tag not in CORNER_FORMS:
            raise OperatorError(f"{name.tag.value} has no corner formulas")
        corner = CORNER_FORMS[name.tag](name.n, p, name.beta)
        if corner is None:
            raise ArgumentError(f"column {p} of {name.label()} is not a corner")
        return corner
    return CLOSED_FORMS[name.tag](name.n, p, name.beta)


def corner_columns(name: MatrixName) -> tuple:
    """Indici delle colonne con formula d'angolo"""
    if name.tag is MatrixTag.H:
        return tuple(sorted({0, name.n}))
    if name.tag is MatrixTag.T:
        return tuple(sorted({0, name.n - 1}))
    return ()


# --- riduzioni e relazioni di shift ---------------------------------------------------

def reduce_conjugation(name: MatrixName, m: int) -> FiniteOperator:
    """((1-x)^(-m), x) M ((1-x)^m, x) troncata, per M = A_n^beta o G_n^beta"""
    if name.tag not in (MatrixTag.A, MatrixTag.G):
        raise OperatorError(f"reduction is defined for A and G, not {name.tag.value}")
    if not 0 <= m < name.n:
        raise ArgumentError(f"reduction step m={m} out of range for n={name.n}")
    operator = build(name)
    if m == 0:
        return operator
    dim, reduced = name.dim, name.dim - m
    left = multiplication(TruncatedSeries.geometric(1, dim) ** m, reduced, dim)
    right = multiplication(_one_minus_x(m), dim, reduced)
    return left @ operator @ right


def reduced_name(name: MatrixName, m: int) -> MatrixName:
    """A_(n-m)^(n beta/(n-m)) o G analogo"""
    return MatrixName(name.tag, name.n - m, name.n * name.beta / (name.n - m))


def shift_relations_check(n: int) -> bool:
    """U~_n = (x,x)^T U_n (x,x) e U~_n = U_n E (x,x) I_(n-1), con i corrispondenti per le inverse"""
    if n < 1:
        raise ArgumentError(f"shift relations need n >= 1, got {n}")
    u, u_inv = build(MatrixName(MatrixTag.U, n)), build(MatrixName(MatrixTag.UINV, n))
    ut, ut_inv = build(MatrixName(MatrixTag.UT, n)), build(MatrixName(MatrixTag.UTINV, n))
    up, down = raising(n), lowering(n)
    shifted = u @ shift_operator(1, n + 1) @ up
    tail_zero = all(value == 0 for value in shifted.to_rows()[n])
    checks = [
        (down @ up).is_identity(),
        down @ u @ up == ut,
        tail_zero and shifted.block(n, n) == ut,
        down @ u_inv @ up == ut_inv,
        down @ shift_operator(-1, n + 1) @ u_inv @ inclusion(n) == ut_inv,
    ]
    return all(checks)
