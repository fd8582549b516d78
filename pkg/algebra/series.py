# algebra/series.py
"""Serie formali troncate su Q o su Q[t], con ordine di troncamento esplicito."""
import logging
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, List

from algebra.exact_core import Polynomial, SeriesError

logger = logging.getLogger(__name__)

DEFAULT_GUARD = 4


def default_order(n: int, guard: int = DEFAULT_GUARD) -> int:
    """Ordine N = 2n + guard usato per l'estrazione dei numeratori"""
    return 2 * n + guard


def _coerce(c: Any) -> Any:
    if isinstance(c, (Fraction, Polynomial)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported series coefficient {c!r}")


def _invert_unit(c: Any) -> Any:
    if isinstance(c, Polynomial):
        if c.degree != 0:
            raise SeriesError(f"constant term {c} is not invertible")
        return Fraction(1) / c[0]
    if c == 0:
        raise SeriesError("constant term is zero")
    return Fraction(1) / c


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (Fraction, int, Polynomial))


class TruncatedSeries:
    """Serie nota esattamente fino a x^order"""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Any], order: int = None):
        values = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise SeriesError("truncation order must be >= 0")
        values = values[: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        self.coeffs = tuple(values)
        self.order = order

    # --- costruttori ---------------------------------------------------
    @classmethod
    def constant(cls, c: Any, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        if order < 1:
            raise SeriesError("the series x needs order >= 1")
        return cls([0, 1], order)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls([p[k] for k in range(order + 1)], order)

    @classmethod
    def geometric(cls, c: Any, order: int) -> "TruncatedSeries":
        """1/(1 - c x)"""
        ratio = _coerce(c)
        coeffs: List[Any] = [Fraction(1)]
        for _ in range(order):
            coeffs.append(coeffs[-1] * ratio)
        return cls(coeffs, order)

    # --- accesso -------------------------------------------------------
    def __getitem__(self, k: int) -> Any:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise SeriesError(f"coefficient x^{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def evaluate_coeffs(self, point: Any) -> "TruncatedSeries":
        """Sostituisce la variabile interna dei coefficienti polinomiali"""
        return self.map_coeffs(lambda c: c(point) if isinstance(c, Polynomial) else c)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def agrees_with(self, other: "TruncatedSeries", order: int = None) -> bool:
        """Uguaglianza esatta fino all'ordine comune (o a quello indicato)"""
        limit = min(self.order, other.order) if order is None else order
        if limit > self.order or limit > other.order:
            raise SeriesError(f"order {limit} not available for comparison")
        return all(self.coeffs[k] == other.coeffs[k] for k in range(limit + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    # --- aritmetica ----------------------------------------------------
    def __add__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order
            )
        if _is_scalar(other):
            return TruncatedSeries([self.coeffs[0] + other, *self.coeffs[1:]], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries) and not _is_scalar(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            out: List[Any] = [Fraction(0)] * (order + 1)
            for i in range(order + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(order + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(out, order)
        if _is_scalar(other):
            return self.map_coeffs(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """1/f, richiede termine noto invertibile"""
        inv0 = _invert_unit(self.coeffs[0])
        out: List[Any] = [inv0]
        for n in range(1, self.order + 1):
            acc: Any = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k] != 0:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return self.truncate(order) * other.truncate(order).inverse()
        if _is_scalar(other):
            return self * _invert_unit(_coerce(other))
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "TruncatedSeries":
        return self.inverse() * other

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int):
            return self.pow_rational(k)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = TruncatedSeries.constant(1, self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- calcolo formale -----------------------------------------------
    def derivative(self) -> "TruncatedSeries":
        if self.order < 1:
            raise SeriesError("derivative needs order >= 1")
        return TruncatedSeries(
            [k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1
        )

    def integral(self) -> "TruncatedSeries":
        """Primitiva con termine noto nullo"""
        return TruncatedSeries(
            [0] + [self.coeffs[k] / (k + 1) for k in range(self.order + 1)], self.order + 1
        )

    def mul_x(self, k: int = 1) -> "TruncatedSeries":
        return TruncatedSeries([0] * k + list(self.coeffs), self.order + k)

    def div_x(self, k: int = 1) -> "TruncatedSeries":
        if k > self.order or any(self.coeffs[i] != 0 for i in range(k)):
            raise SeriesError(f"series is not divisible by x^{k}")
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def dilate(self, c: Any) -> "TruncatedSeries":
        """f(c x)"""
        scale: Any = Fraction(1)
        out: List[Any] = []
        for coeff in self.coeffs:
            out.append(coeff * scale)
            scale = scale * c
        return TruncatedSeries(out, self.order)

    def compose(self, g: "TruncatedSeries") -> "TruncatedSeries":
        """f(g(x)) con accumulazione di Horner; richiede g(0) = 0"""
        if g.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        order = min(self.order, g.order)
        inner = g.truncate(order)
        acc = TruncatedSeries.constant(self.coeffs[order], order)
        for k in range(order - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def reversion(self) -> "TruncatedSeries":
        """Inversa compositiva, risolta coefficiente per coefficiente"""
        if self.coeffs[0] != 0:
            raise SeriesError("reversion needs g(0) = 0")
        if self.order < 1:
            raise SeriesError("reversion needs order >= 1")
        inv1 = _invert_unit(self.coeffs[1])
        h: List[Any] = [Fraction(0), inv1]
        for n in range(2, self.order + 1):
            partial = TruncatedSeries(h, n)
            defect = self.truncate(n).compose(partial).coeffs[n]
            h.append(-defect * inv1)
        logger.debug("reversion solved through order %d", self.order)
        return TruncatedSeries(h, self.order)

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != 1:
            raise SeriesError("log needs constant term 1")
        if self.order == 0:
            return TruncatedSeries([0], 0)
        head = self.truncate(self.order - 1)
        return (self.derivative() * head.inverse()).integral()

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != 0:
            raise SeriesError("exp needs constant term 0")
        out: List[Any] = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc: Any = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k] != 0:
                    acc = acc + k * self.coeffs[k] * out[n - k]
            out.append(acc / n)
        return TruncatedSeries(out, self.order)

    def pow_rational(self, phi: Any) -> "TruncatedSeries":
        """f^phi = exp(phi log f); phi razionale o polinomio in un parametro"""
        return (self.log() * _coerce(phi)).exp()


# --- interfaccia funzionale ---------------------------------------------------

def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f / g


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f.compose(g)


def reversion(g: TruncatedSeries) -> TruncatedSeries:
    return g.reversion()


def log(f: TruncatedSeries) -> TruncatedSeries:
    return f.log()


def exp(f: TruncatedSeries) -> TruncatedSeries:
    return f.exp()


def pow_rational(f: TruncatedSeries, phi: Any) -> TruncatedSeries:
    return f.pow_rational(phi)


def sheffer_rows(b: TruncatedSeries, g_log: TruncatedSeries, n_max: int) -> List[Polynomial]:
    """s_0..s_nMax con sum s_n(phi)/n! x^n = b(x) exp(phi g(x))"""
    if b.coeffs[0] == 0:
        raise SeriesError("sheffer rows need b(0) != 0")
    if g_log.coeffs[0] != 0:
        raise SeriesError("sheffer rows need g(0) = 0")
    if b.order < n_max or g_log.order < n_max:
        raise SeriesError(f"series order too small for {n_max} sheffer rows")
    phi = Polynomial.x()
    generating = b.truncate(n_max) * (g_log.truncate(n_max) * phi).exp()
    rows = []
    for n in range(n_max + 1):
        c = generating.coeffs[n]
        rows.append((c if isinstance(c, Polynomial) else Polynomial([c])) * factorial(n))
    return rows


def lagrange_reversion_coefficient(g: TruncatedSeries, n: int) -> Any:
    """[x^n] della reversione via formula di Lagrange: (1/n)[x^(n-1)](x/g)^n"""
    if n < 1:
        raise SeriesError("Lagrange coefficient needs n >= 1")
    ratio = g.div_x().inverse()
    if ratio.order < n - 1:
        raise SeriesError(f"order {g.order} too small for coefficient x^{n}")
    return (ratio.truncate(n - 1) ** n).coeffs[n - 1] / n
