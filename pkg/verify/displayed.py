# verify/displayed.py
"""Matrici e triangoli tabulati, riprodotti esattamente dalle costruzioni del toolkit."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from arrays.operator import FiniteOperator
from arrays.riordan import (
    ArrayFlavor,
    SeriesPair,
    catalan_series,
    derivative_pair,
    entry_grid,
    log_derivative_pair,
    log_derivative_prefactor,
    one_plus_x,
)
from arrays.transforms import MatrixName, MatrixTag, build

Rows = Sequence[Sequence[object]]


def _grid(rows: Rows, scale: object = 1) -> FiniteOperator:
    factor = Fraction(str(scale))
    return FiniteOperator([[Fraction(str(v)) * factor for v in row] for row in rows])


def _named(tag: MatrixTag, n: int, beta: object = None) -> Callable[[], FiniteOperator]:
    return lambda: build(MatrixName(tag, n, None if beta is None else Fraction(str(beta))))


def _label(tag: MatrixTag, n: int, beta: object = None) -> str:
    return MatrixName(tag, n, None if beta is None else Fraction(str(beta))).label()


@dataclass(frozen=True)
class DisplayedMatrix:
    """Matrice tabulata: scala * righe, confrontata con una costruzione"""
    label: str
    construct: Callable[[], FiniteOperator]
    rows: Rows
    scale: object = 1

    def expected(self) -> FiniteOperator:
        return _grid(self.rows, self.scale)


@dataclass(frozen=True)
class DisplayedTriangle:
    """Primi righi di un array di Riordan (b, x a), righe irregolari completate con zeri"""
    label: str
    pair: Callable[[int], SeriesPair]
    rows: Rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def expected(self) -> FiniteOperator:
        size = self.size
        return _grid([list(row) + [0] * (size - len(row)) for row in self.rows])

    def actual(self) -> FiniteOperator:
        return entry_grid(self.pair(self.size + 2), ArrayFlavor.ORDINARY, self.size, triangular=True)


def _entry(tag: MatrixTag, n: int, rows: Rows, scale: object = 1, beta: object = None) -> DisplayedMatrix:
    return DisplayedMatrix(_label(tag, n, beta), _named(tag, n, beta), rows, scale)


_UT = MatrixTag.UT
_UTINV = MatrixTag.UTINV

DISPLAYED_MATRICES: List[DisplayedMatrix] = [
    # U~ e inversa
    _entry(_UT, 2, [[1, 1], [-1, 1]], "1/2"),
    _entry(_UT, 3, [[1, 1, 1], [-2, 0, 4], [1, -1, 1]], "1/6"),
    _entry(_UT, 4, [[1, 1, 1, 1], [-3, -1, 3, 11], [3, -1, -3, 11], [-1, 1, -1, 1]], "1/24"),
    _entry(_UTINV, 2, [[1, -1], [1, 1]]),
    _entry(_UTINV, 3, [[2, -1, 2], [3, 0, -3], [1, 1, 1]]),
    _entry(_UTINV, 4, [[6, -2, 2, -6], [11, -1, -1, 11], [6, 2, -2, -6], [1, 1, 1, 1]]),
    _entry(MatrixTag.J, 3, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
    _entry(MatrixTag.VT, 4, [[1, 0, 0, 0], [3, 1, 0, 0], [3, 2, 1, 0], [1, 1, 1, 1]]),
    _entry(MatrixTag.VTINV, 4, [[1, 0, 0, 0], [-3, 1, 0, 0], [3, -2, 1, 0], [-1, 1, -1, 1]]),
    DisplayedMatrix(
        "Utinv_4 Vtinv_4",
        lambda: build(MatrixName(_UTINV, 4)) @ build(MatrixName(MatrixTag.VTINV, 4)),
        [[24, -12, 8, -6], [0, 12, -12, 11], [0, 0, 4, -6], [0, 0, 0, 1]],
    ),
    DisplayedMatrix(
        "Vt_4 Ut_4",
        lambda: build(MatrixName(MatrixTag.VT, 4)) @ build(MatrixName(_UT, 4)),
        [[1, 1, 1, 1], [0, 2, 6, 14], [0, 0, 6, 36], [0, 0, 0, 24]],
        "1/24",
    ),

    # A^beta per beta = 1 e beta = -1
    _entry(MatrixTag.A, 2, [[2, 1], [-1, 0]], beta=1),
    _entry(MatrixTag.A, 3, [[5, "5/2", 1], [-6, -2, 0], [2, "1/2", 0]], beta=1),
    _entry(MatrixTag.A, 4, [[14, 7, 3, 1], [-28, "-35/3", "-10/3", 0],
                            [20, "22/3", "5/3", 0], [-5, "-5/3", "-1/3", 0]], beta=1),
    _entry(MatrixTag.A, 2, [[0, -1], [1, 2]], beta=-1),
    _entry(MatrixTag.A, 3, [[0, "1/2", 2], [0, -2, -6], [1, "5/2", 5]], beta=-1),
    _entry(MatrixTag.A, 4, [[0, "-1/3", "-5/3", -5], [0, "5/3", "22/3", 20],
                            [0, "-10/3", "-35/3", -28], [1, 3, 7, 14]], beta=-1),

    # F~, S~ e inverse
    _entry(MatrixTag.FT, 2, [[1, 1], [-1, 3]], 3),
    _entry(MatrixTag.FT, 3, [[1, 1, 1], [-2, 3, 13], [1, -4, 16]], 4),
    _entry(MatrixTag.FT, 4, [[1, 1, 1, 1], [-3, 3, 15, 39], [3, -9, 9, 171], [-1, 5, -25, 125]], 5),
    _entry(MatrixTag.FTINV, 2, [[3, -1], [1, 1]], "2/24"),
    _entry(MatrixTag.FTINV, 3, [[20, -4, 2], [9, 3, -3], [1, 1, 1]], "6/720"),
    _entry(MatrixTag.FTINV, 4, [[210, -30, 10, -6], [107, 19, -13, 11],
                                [18, 10, 2, -6], [1, 1, 1, 1]], "24/40320"),
    _entry(MatrixTag.ST, 2, [[1, 0], [1, 2]], 6),
    _entry(MatrixTag.ST, 3, [[1, 0, 0], [3, "5/2", 0], [1, "5/2", 5]], 24),
    _entry(MatrixTag.ST, 4, [[1, 0, 0, 0], [6, 3, 0, 0], [6, 8, 7, 0], [1, 3, 7, 14]], 120),
    _entry(MatrixTag.STINV, 2, [[2, 0], [-1, 1]], "2/24"),
    _entry(MatrixTag.STINV, 3, [[5, 0, 0], [-6, 2, 0], [2, -1, 1]], "6/720"),
    _entry(MatrixTag.STINV, 4, [[14, 0, 0, 0], [-28, "14/3", 0, 0],
                                [20, "-16/3", 2, 0], [-5, "5/3", -1, 1]], "24/40320"),

    # U, F, S, ^BF e inverse
    _entry(MatrixTag.U, 0, [[1]]),
    _entry(MatrixTag.U, 1, [[1, 0], [-1, 1]]),
    _entry(MatrixTag.U, 2, [[1, 0, 0], [-2, 1, 1], [1, -1, 1]], "1/2"),
    _entry(MatrixTag.U, 3, [[1, 0, 0, 0], [-3, 1, 1, 1], [3, -2, 0, 4], [-1, 1, -1, 1]], "1/6"),
    _entry(MatrixTag.UINV, 3, [[6, 0, 0, 0], [11, 2, -1, 2], [6, 3, 0, -3], [1, 1, 1, 1]]),
    _entry(MatrixTag.F, 2, [[1, 0, 0], [-2, 3, 3], [1, -3, 9]]),
    _entry(MatrixTag.F, 3, [[1, 0, 0, 0], [-3, 4, 4, 4], [3, -8, 12, 52], [-1, 4, -16, 64]]),
    _entry(MatrixTag.FINV, 2, [[12, 0, 0], [7, 3, -1], [1, 1, 1]], "2/24"),
    _entry(MatrixTag.FINV, 3, [[120, 0, 0, 0], [74, 20, -4, 2], [15, 9, 3, -3], [1, 1, 1, 1]], "6/720"),
    _entry(MatrixTag.S, 2, [[1, 0, 0], [4, 3, 0], [1, 3, 6]], 2),
    _entry(MatrixTag.S, 3, [[1, 0, 0, 0], [9, 4, 0, 0], [9, 12, 10, 0], [1, 4, 10, 20]], 6),
    _entry(MatrixTag.S, 4, [[1, 0, 0, 0, 0], [16, 5, 0, 0, 0], [36, 30, 15, 0, 0],
                            [16, 30, 40, 35, 0], [1, 5, 15, 35, 70]], 24),
    _entry(MatrixTag.SINV, 2, [[6, 0, 0], [-8, 2, 0], [3, -1, 1]], "2/24"),
    _entry(MatrixTag.SINV, 3, [[20, 0, 0, 0], [-45, 5, 0, 0], [36, -6, 2, 0], [-10, 2, -1, 1]], "6/720"),
    _entry(MatrixTag.SINV, 4, [[70, 0, 0, 0, 0], [-224, 14, 0, 0, 0], [280, -28, "14/3", 0, 0],
                               [-160, 20, "-16/3", 2, 0], [35, -5, "5/3", -1, 1]], "24/40320"),
    _entry(MatrixTag.BF, 1, [[1, 1], [-1, 1]]),
    _entry(MatrixTag.BF, 2, [[1, 1, 1], [-2, 1, 7], [1, -2, 4]]),
    _entry(MatrixTag.BF, 3, [[1, 1, 1, 1], [-3, 1, 9, 25], [3, -5, -1, 67], [-1, 3, -9, 27]]),
    _entry(MatrixTag.BFINV, 1, [[1, -1], [1, 1]], "1/2"),
    _entry(MatrixTag.BFINV, 2, [[6, -2, 2], [5, 1, -3], [1, 1, 1]], "2/24"),
    _entry(MatrixTag.BFINV, 3, [[60, -12, 6, -6], [47, 5, -7, 11], [12, 6, 0, -6], [1, 1, 1, 1]], "6/720"),

    # G^beta, radici e potenze di X
    _entry(MatrixTag.G, 2, [[6, 3, 1], [-8, -3, 0], [3, 1, 0]], beta=1),
    _entry(MatrixTag.G, 3, [[20, 10, 4, 1], [-45, -20, -6, 0], [36, 15, 4, 0], [-10, -4, -1, 0]], beta=1),
    _entry(MatrixTag.G, 4, [[70, 35, 15, 5, 1], [-224, -105, -40, -10, 0], [280, 126, 45, 10, 0],
                            [-160, -70, -24, -5, 0], [35, 15, 5, 1, 0]], beta=1),
    _entry(MatrixTag.G, 2, [[0, 1, 3], [0, -3, -8], [1, 3, 6]], beta=-1),
    _entry(MatrixTag.G, 3, [[0, -1, -4, -10], [0, 4, 15, 36], [0, -6, -20, -45], [1, 4, 10, 20]], beta=-1),
    _entry(MatrixTag.G, 4, [[0, 1, 5, 15, 35], [0, -5, -24, -70, -160], [0, 10, 45, 126, 280],
                            [0, -10, -40, -105, -224], [1, 5, 15, 35, 70]], beta=-1),
    _entry(MatrixTag.X, 3, [[3, 1, 0, 0], [-6, -1, 1, 0], [4, 0, -1, 1], [-1, 0, 0, -1]]),
    DisplayedMatrix(
        "X_3^2", lambda: build(MatrixName(MatrixTag.X, 3)).power(2),
        [[3, 2, 1, 0], [-8, -5, -2, 1], [7, 4, 1, -2], [-2, -1, 0, 1]],
    ),
    DisplayedMatrix(
        "X_3^3", lambda: build(MatrixName(MatrixTag.X, 3)).power(3),
        [[1, 1, 1, 1], [-3, -3, -3, -3], [3, 3, 3, 3], [-1, -1, -1, -1]],
    ),
    _entry(MatrixTag.G, 2, [[3, 1, 0], [-3, 0, 1], [1, 0, 0]], beta="1/2"),
    _entry(MatrixTag.G, 3, [[4, 1, 0, 0], [-6, 0, 1, 0], [4, 0, 0, 1], [-1, 0, 0, 0]], beta="1/3"),
    _entry(MatrixTag.G, 4, [[5, 1, 0, 0, 0], [-10, 0, 1, 0, 0], [10, 0, 0, 1, 0],
                            [-5, 0, 0, 0, 1], [1, 0, 0, 0, 0]], beta="1/4"),
    _entry(MatrixTag.G, 2, [[0, 0, 1], [1, 0, -3], [0, 1, 3]], beta="-1/2"),
    _entry(MatrixTag.G, 3, [[0, 0, 0, -1], [1, 0, 0, 4], [0, 1, 0, -6], [0, 0, 1, 4]], beta="-1/3"),
    _entry(MatrixTag.G, 4, [[0, 0, 0, 0, 1], [1, 0, 0, 0, -5], [0, 1, 0, 0, 10],
                            [0, 0, 1, 0, -10], [0, 0, 0, 1, 5]], beta="-1/4"),

    # H^beta e T^beta per beta = 1
    _entry(MatrixTag.H, 2, [[15, 5, 1], [-12, 2, 4], [3, -1, 1]], "1/6", beta=1),
    _entry(MatrixTag.H, 3, [[84, 28, 7, 1], [-108, -4, 15, 9], [54, -6, -1, 9], [-10, 2, -1, 1]],
           "1/20", beta=1),
    _entry(MatrixTag.H, 4, [[495, 165, 45, 9, 1], [-880, -110, "160/3", 44, 16], [660, 0, -30, 24, 36],
                            [-240, 20, 0, -6, 16], [35, -5, "5/3", -1, 1]], "1/70", beta=1),
    _entry(MatrixTag.T, 2, [[3, 1], [-1, 1]], "1/2", beta=1),
    _entry(MatrixTag.T, 3, [[12, 4, 1], [-9, 2, 3], [2, -1, 1]], "1/5", beta=1),
    _entry(MatrixTag.T, 4, [[55, "55/3", 5, 1], [-66, 0, 10, 6], [30, -6, 0, 6], [-5, "5/3", -1, 1]],
           "1/14", beta=1),
]


def _prefactor_over(base: Callable[[int], object]) -> Callable[[int], SeriesPair]:
    """(1 + x(log a)', x/a)"""
    def pair(order: int) -> SeriesPair:
        a = base(order)
        return SeriesPair(log_derivative_prefactor(a), a.inverse())
    return pair


DISPLAYED_TRIANGLES: List[DisplayedTriangle] = [
    DisplayedTriangle(
        "(1+x, x(1+x))",
        lambda order: SeriesPair(one_plus_x(order), one_plus_x(order)),
        [[1], [1, 1], [0, 2, 1], [0, 1, 3, 1], [0, 0, 3, 4, 1], [0, 0, 1, 6, 5, 1],
         [0, 0, 0, 4, 10, 6, 1]],
    ),
    DisplayedTriangle(
        "(1+x(log C)', xC)",
        lambda order: log_derivative_pair(catalan_series(order)),
        [[1], [1, 1], [3, 2, 1], [10, 6, 3, 1], [35, 20, 10, 4, 1], [126, 70, 35, 15, 5, 1]],
    ),
    DisplayedTriangle(
        "((xC)', xC)",
        lambda order: derivative_pair(catalan_series(order)),
        [[1], [2, 1], [6, 3, 1], [20, 10, 4, 1], [70, 35, 15, 5, 1], [252, 126, 56, 21, 6, 1]],
    ),
    DisplayedTriangle(
        "(1+x(log C)', x/C)",
        _prefactor_over(catalan_series),
        [[1], [1, 1], [3, 0, 1], [10, 1, -1, 1], [35, 4, 0, -2, 1], [126, 15, 1, 0, -3, 1]],
    ),
    DisplayedTriangle(
        "((x(1+x))', x(1+x))",
        lambda order: derivative_pair(one_plus_x(order)),
        [[1], [2, 1], [0, 3, 1], [0, 2, 4, 1], [0, 0, 5, 5, 1], [0, 0, 2, 9, 6, 1],
         [0, 0, 0, 7, 14, 7, 1]],
    ),
    DisplayedTriangle(
        "(1+x(log(1+x))', x/(1+x))",
        _prefactor_over(one_plus_x),
        [[1], [1, 1], [-1, 0, 1], [1, -1, -1, 1], [-1, 2, 0, -2, 1], [1, -3, 2, 2, -3, 1],
         [-1, 4, -5, 0, 5, -4, 1]],
    ),
]


def displayed_mismatches() -> List[Tuple[str, FiniteOperator, FiniteOperator]]:
    """(etichetta, costruita, tabulata) per ogni voce che non coincide"""
    out = []
    for entry in DISPLAYED_MATRICES:
        actual = entry.construct()
        if actual != entry.expected():
            out.append((entry.label, actual, entry.expected()))
    for triangle in DISPLAYED_TRIANGLES:
        actual = triangle.actual()
        if actual != triangle.expected():
            out.append((triangle.label, actual, triangle.expected()))
    return out
