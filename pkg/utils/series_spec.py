# utils/series_spec.py
"""Mini-linguaggio delle serie per la CLI: nomi del catalogo, lagrange(spec, beta) e funzioni razionali."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple, Union

from pyparsing import (
    Forward,
    Keyword,
    Literal,
    OneOrMore,
    Optional as Opt,
    ParseBaseException,
    ParseFatalException,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
    one_of,
)

from algebra.exact_core import Polynomial, RiordanError, SeriesError, format_rational
from algebra.series import TruncatedSeries
from arrays.lagrange import lagrange_associate
from arrays.riordan import CATALOG_ARGUMENTS, catalog_series

logger = logging.getLogger(__name__)

MAX_EXPONENT = 1024


class SeriesSpecError(RiordanError):
    """Errore di sintassi con posizione (0-based) e token attesi"""

    def __init__(self, message: str, position: int, expected: FrozenSet[str]):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = expected


# --- AST --------------------------------------------------------------------------

@dataclass(frozen=True)
class NamedSeries:
    name: str
    arg: Optional[Fraction] = None

    def resolve(self, order: int) -> TruncatedSeries:
        return catalog_series(self.name, order, self.arg)

    def render(self) -> str:
        return self.name if self.arg is None else f"{self.name}({format_rational(self.arg)})"


@dataclass(frozen=True)
class LagrangeSeries:
    """(beta)a per una serie a con a(0) = 1"""
    inner: "SeriesSpec"
    beta: Fraction

    def resolve(self, order: int) -> TruncatedSeries:
        base = self.inner.resolve(order)
        if base[0] != 1:
            raise SeriesError(f"lagrange needs a series with constant term 1, got {base[0]}")
        return lagrange_associate(base, self.beta, 1, order)

    def render(self) -> str:
        return f"lagrange({self.inner.render()}, {format_rational(self.beta)})"


@dataclass(frozen=True)
class Factor:
    poly: Polynomial
    power: int = 1

    def render(self) -> str:
        body = f"({self.poly.render()})"
        return body if self.power == 1 else f"{body}^{self.power}"


@dataclass(frozen=True)
class RationalSeries:
    """Prodotto di fattori al numeratore diviso prodotto di fattori al denominatore"""
    numerator: Tuple[Factor, ...]
    denominator: Tuple[Factor, ...] = ()

    @staticmethod
    def _product(factors: Tuple[Factor, ...], order: int) -> TruncatedSeries:
        out = TruncatedSeries.constant(1, order)
        for factor in factors:
            out = out * TruncatedSeries.from_polynomial(factor.poly, order) ** factor.power
        return out

    def resolve(self, order: int) -> TruncatedSeries:
        top = self._product(self.numerator, order)
        if not self.denominator:
            return top
        bottom = self._product(self.denominator, order)
        if bottom[0] == 0:
            raise SeriesError("denominator vanishes at x = 0")
        return top * bottom.inverse()

    def _bare(self) -> bool:
        if len(self.numerator) != 1 or self.numerator[0].power != 1:
            return False
        terms = [c for c in self.numerator[0].poly.coeffs if c != 0]
        return not self.denominator or len(terms) == 1

    def render(self) -> str:
        head = self.numerator[0].poly.render() if self._bare() else "".join(f.render() for f in self.numerator)
        if not self.denominator:
            return head
        return f"{head}/{''.join(f.render() for f in self.denominator)}"


SeriesSpec = Union[NamedSeries, LagrangeSeries, RationalSeries]


# --- grammatica -------------------------------------------------------------------

def _rational(s, loc, toks) -> Fraction:
    try:
        numerator = int(toks[0])
        denominator = int(toks[1]) if len(toks) > 1 else 1
    except ValueError:
        raise ParseFatalException(s, loc, "integer literal too long") from None
    if denominator == 0:
        raise ParseFatalException(s, loc, "zero denominator")
    return Fraction(numerator, denominator)


def _exponent(s, loc, toks) -> int:
    digits = toks[0]
    if len(digits) > len(str(MAX_EXPONENT)) or int(digits) > MAX_EXPONENT:
        raise ParseFatalException(s, loc, f"exponent exceeds {MAX_EXPONENT}")
    return int(digits)


def _signed(toks) -> Fraction:
    return -toks[1] if toks[0] == "-" else toks[1]


def _term(toks) -> Polynomial:
    out = Polynomial.one()
    for tok in toks:
        out = out * tok
    return out


def _poly(toks) -> Polynomial:
    total, sign = Polynomial.zero(), 1
    for tok in toks:
        if tok in ("+", "-"):
            sign = -1 if tok == "-" else 1
        else:
            total, sign = total + tok * sign, 1
    return total


def _named(s, loc, toks) -> NamedSeries:
    name = toks[0]
    arg = toks[1] if len(toks) > 1 else None
    accepts, requires = CATALOG_ARGUMENTS[name]
    if arg is None and requires:
        raise ParseFatalException(s, loc, f"{name} needs a rational argument")
    if arg is not None and not accepts:
        raise ParseFatalException(s, loc, f"{name} takes no argument")
    return NamedSeries(name, arg)


def make_grammar():
    """Grammatica pyparsing: spec := lagrange | name ['(' rational ')'] | ratfunc"""
    lpar, rpar, comma = Suppress("("), Suppress(")"), Suppress(",")
    exponent = Word(nums).set_name("exponent").set_parse_action(_exponent)

    rational = (Word(nums) + Opt(Suppress("/") + Word(nums))).set_name("rational")
    rational.set_parse_action(_rational)
    signed_rational = (Opt(Literal("-"), default="+") + rational).set_name("signed rational")
    signed_rational.set_parse_action(_signed)

    power = Suppress("^") + exponent
    monomial = (Literal("x").suppress() + Opt(power, default=1)).set_name("'x'")
    monomial.set_parse_action(lambda toks: Polynomial.monomial(toks[0]))
    term = ((rational + Opt(monomial)) | monomial).set_name("term")
    term.set_parse_action(_term)
    sign = one_of("+ -")
    poly = (Opt(sign) + term + ZeroOrMore(sign + term)).set_name("polynomial")
    poly.set_parse_action(_poly)

    factor = (lpar + poly - rpar + Opt(power, default=1)).set_name("parenthesized polynomial")
    factor.set_parse_action(lambda toks: Factor(toks[0], toks[1]))
    bare = poly.copy().add_parse_action(lambda toks: Factor(toks[0], 1))
    side = (OneOrMore(factor) | bare).set_parse_action(lambda toks: tuple(toks))

    ratfunc = (side + Opt(Suppress("/") - side)).set_name("rational function")
    ratfunc.set_parse_action(lambda toks: RationalSeries(*toks))

    name = one_of("exp geom onepx catalan genbinom", as_keyword=True).set_name("series name")
    named = (name + Opt(lpar + signed_rational + rpar)).set_parse_action(_named)

    spec = Forward().set_name("series spec")
    lagrange = (Keyword("lagrange") + lpar + spec + comma + signed_rational + rpar).set_name("lagrange(spec, beta)")
    lagrange.set_parse_action(lambda toks: LagrangeSeries(toks[1], toks[2]))

    spec <<= lagrange | named | ratfunc
    return spec


_GRAMMAR = make_grammar()


def _expected_tokens(exc: ParseBaseException) -> FrozenSet[str]:
    msg = exc.msg
    if msg.startswith("Expected "):
        msg = msg[len("Expected "):]
    alternatives = {part.strip() for part in msg.split(", found")[0].split(" | ") if part.strip()}
    return frozenset(alternatives or {msg})


def parse_series_spec(text: str) -> SeriesSpec:
    """Testo -> AST; errori strutturati con posizione"""
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as exc:
        logger.debug("parse error in %r: %s", text, exc)
        raise SeriesSpecError(f"cannot parse series {text!r}: {exc.msg}", exc.loc,
                              _expected_tokens(exc)) from None
    except RecursionError:
        raise SeriesSpecError(f"series {text[:40]!r} is nested too deeply", 0,
                              frozenset({"series spec"})) from None


def resolve_series(text: str, order: int) -> TruncatedSeries:
    """Parsing e risoluzione a ordine fissato"""
    return parse_series_spec(text).resolve(order)
