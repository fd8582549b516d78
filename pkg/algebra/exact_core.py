# algebra/exact_core.py
"""Razionali esatti, polinomi densi e strumenti combinatori (binomiali, fattoriali, Stirling)."""
import logging
import math
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Rational = Fraction

# Grado del polinomio nullo: minore di ogni intero
NO_DEGREE = float("-inf")

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RiordanError(Exception):
    """Errore base del toolkit"""


class ArgumentError(RiordanError):
    """Argomento fuori dal dominio ammesso"""


class DegreeError(RiordanError):
    """Grado del polinomio incompatibile con l'operazione"""


class SeriesError(RiordanError):
    """Precondizione violata su una serie troncata"""


class OperatorError(RiordanError):
    """Operatore finito non costruibile o dimensioni incompatibili"""


class LagrangeError(RiordanError):
    """Singolarità non rimovibile nella serie di Lagrange"""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


def as_rational(value: Any) -> Fraction:
    """Converte int, Fraction o stringa "p/q" in Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ArgumentError(f"malformed rational: {value!r}")
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise ArgumentError(f"zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise ArgumentError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Forma canonica "p" oppure "p/q" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _coerce(c: Any) -> Any:
    if isinstance(c, (Fraction, Polynomial)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class Polynomial:
    """Polinomio denso su Q o su Q[t]; coeffs[k] è il coefficiente di x^k"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        values = [_coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Any, ...] = tuple(values)

    # --- costruttori ---------------------------------------------------
    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Any) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> "Polynomial":
        if k < 0:
            raise DegreeError(f"negative exponent {k}")
        return cls([0] * k + [c])

    # --- proprietà -----------------------------------------------------
    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def padded(self, length: int) -> List[Any]:
        """Coefficienti 0..length-1, completati con zeri"""
        if self.degree >= length:
            raise DegreeError(f"degree {self.degree} does not fit in {length} slots")
        return [self[k] for k in range(length)]

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "Polynomial":
        return Polynomial(fn(c) for c in self.coeffs)

    # --- aritmetica ----------------------------------------------------
    def _lift(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, Fraction, int)):
            return NotImplemented
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, Fraction, int)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, (Fraction, int)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out: List[Any] = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.degree != 0:
                raise DegreeError("polynomial division only by nonzero constants")
            other = other[0]
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial(c / other for c in self.coeffs)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise DegreeError(f"polynomial power needs a nonnegative integer, got {k!r}")
        result, base = Polynomial.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Fraction, int)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    # --- valutazione e sostituzioni ------------------------------------
    def __call__(self, point: Any) -> Any:
        """Valutazione di Horner in un punto dell'anello (anche un polinomio)"""
        result: Any = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def compose(self, other: "Polynomial") -> "Polynomial":
        return self._lift(self(other))

    def shift(self, c: Any) -> "Polynomial":
        """p(x + c)"""
        return self.compose(Polynomial([c, 1]))

    def mul_x(self, k: int = 1) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def div_x(self, k: int = 1) -> "Polynomial":
        """Divisione esatta per x^k"""
        if any(self[i] != 0 for i in range(k)):
            raise DegreeError(f"polynomial not divisible by x^{k}")
        return Polynomial(self.coeffs[k:])

    def derivative(self) -> "Polynomial":
        return Polynomial(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    # --- rappresentazione ----------------------------------------------
    def render(self, var: str = "x", inner_var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts: List[Tuple[str, str]] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            monomial = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if isinstance(c, Polynomial):
                body = c.render(inner_var)
                text = body if not monomial else f"({body}){monomial}"
                parts.append(("+", text))
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if magnitude == 1 and monomial:
                text = monomial
            else:
                text = format_rational(magnitude) + monomial
            parts.append((sign, text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"


# --- toolkit combinatorio ---------------------------------------------------

def factorial(n: int) -> int:
    return math.factorial(n)


def rat_binomial(z: Any, k: int) -> Any:
    """Binomiale generalizzato C(z, k) = z(z-1)...(z-k+1)/k!; 0 se k < 0"""
    if k < 0:
        return Fraction(0)
    result: Any = Fraction(1)
    for i in range(k):
        result = result * (z - i) / (i + 1)
    return result


def falling_factorial(z: Any, k: int) -> Any:
    result: Any = Fraction(1)
    for i in range(k):
        result = result * (z - i)
    return result


def rising_factorial(z: Any, k: int) -> Any:
    result: Any = Fraction(1)
    for i in range(k):
        result = result * (z + i)
    return result


@lru_cache(maxsize=None)
def falling_poly(k: int) -> Polynomial:
    """(x)_k come polinomio"""
    if k < 0:
        raise ArgumentError(f"falling factorial needs k >= 0, got {k}")
    return falling_factorial(Polynomial.x(), k) if k else Polynomial.one()


@lru_cache(maxsize=None)
def rising_poly(k: int) -> Polynomial:
    """[x]_k come polinomio"""
    if k < 0:
        raise ArgumentError(f"rising factorial needs k >= 0, got {k}")
    return rising_factorial(Polynomial.x(), k) if k else Polynomial.one()


class StirlingKind(Enum):
    FIRST = "first"
    SECOND = "second"


@lru_cache(maxsize=None)
def _stirling_table(kind: StirlingKind, n: int) -> Tuple[Tuple[int, ...], ...]:
    rows: List[List[int]] = [[1]]
    for m in range(1, n + 1):
        prev = rows[-1] + [0]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            if kind is StirlingKind.FIRST:
                row[k] = prev[k - 1] - (m - 1) * prev[k]
            else:
                row[k] = prev[k - 1] + k * prev[k]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def stirling(kind: Union[StirlingKind, str], n: int, k: int) -> Fraction:
    """Numeri di Stirling: prima specie con segno s(n,k), seconda specie S(n,k)"""
    kind = StirlingKind(kind)
    if n < 0 or k < 0 or k > n:
        raise ArgumentError(f"stirling index out of range: n={n}, k={k}")
    return Fraction(_stirling_table(kind, n)[n][k])


def poly_reverse(p: Polynomial, n: int) -> Polynomial:
    """J_n: inverte l'ordine dei coefficienti di un polinomio di grado <= n"""
    if n < 0 or p.degree > n:
        raise DegreeError(f"degree {p.degree} exceeds reversal size {n}")
    return Polynomial(p[n - k] for k in range(n + 1))


def t_poly(phi: Any, beta: Any, n: int) -> Polynomial:
    """t_n(phi|beta, x) = sum C(phi, m) C(beta, n-m) x^m"""
    return Polynomial(rat_binomial(phi, m) * rat_binomial(beta, n - m) for m in range(n + 1))


def binomial_sum(terms: Sequence[Tuple[int, Any]]) -> Polynomial:
    """Assembla sum c_m x^m da coppie (m, c_m)"""
    size = max((m for m, _ in terms), default=-1) + 1
    coeffs: List[Any] = [Fraction(0)] * size
    for m, c in terms:
        coeffs[m] += c
    return Polynomial(coeffs)
