# arrays/operator.py
"""Operatori finiti esatti: matrici di Fraction che agiscono sui polinomi nella base monomiale."""
import logging
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

import numpy as np

from algebra.exact_core import DegreeError, OperatorError, Polynomial, format_rational

logger = logging.getLogger(__name__)


def _to_grid(rows: Any) -> np.ndarray:
    grid = np.array(rows, dtype=object)
    if grid.ndim != 2:
        raise OperatorError(f"operator grid must be 2-dimensional, got shape {grid.shape}")
    for index, value in np.ndenumerate(grid):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise OperatorError(f"entry {index} is not rational: {value!r}")
        grid[index] = Fraction(value)
    return grid


class FiniteOperator:
    """entry(i, j) = coefficiente di x^i nell'immagine di x^j"""

    __slots__ = ("_grid",)

    def __init__(self, rows: Any):
        grid = rows.copy() if isinstance(rows, np.ndarray) else rows
        grid = _to_grid(grid)
        grid.flags.writeable = False
        self._grid = grid

    # --- costruttori ---------------------------------------------------
    @classmethod
    def identity(cls, dim: int) -> "FiniteOperator":
        return cls([[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "FiniteOperator":
        return cls(np.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "FiniteOperator":
        dim = len(values)
        return cls([[values[i] if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_columns(cls, columns: Sequence[Polynomial], rows: int = None) -> "FiniteOperator":
        """Assembla l'operatore dalle immagini dei monomi x^0, x^1, ..."""
        if rows is None:
            rows = len(columns)
        grid = np.full((rows, len(columns)), Fraction(0), dtype=object)
        for j, column in enumerate(columns):
            for i, value in enumerate(column.padded(rows)):
                grid[i, j] = value
        return cls(grid)

    # --- accesso -------------------------------------------------------
    @property
    def shape(self) -> tuple:
        return self._grid.shape

    @property
    def dim(self) -> int:
        rows, cols = self._grid.shape
        if rows != cols:
            raise OperatorError(f"operator of shape {self.shape} has no dimension")
        return rows

    def entry(self, i: int, j: int) -> Fraction:
        return self._grid[i, j]

    def column(self, j: int) -> Polynomial:
        return Polynomial(self._grid[:, j])

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._grid]

    def block(self, rows: int, cols: int) -> "FiniteOperator":
        """Blocco in alto a sinistra"""
        return FiniteOperator(self._grid[:rows, :cols])

    def transpose(self) -> "FiniteOperator":
        return FiniteOperator(self._grid.T)

    # --- algebra -------------------------------------------------------
    def __matmul__(self, other: "FiniteOperator") -> "FiniteOperator":
        if not isinstance(other, FiniteOperator):
            return NotImplemented
        if self.shape[1] != other.shape[0]:
            raise OperatorError(f"cannot compose shapes {self.shape} and {other.shape}")
        return FiniteOperator(self._grid.dot(other._grid))

    def __mul__(self, scalar: Any) -> "FiniteOperator":
        if isinstance(scalar, FiniteOperator):
            return self @ scalar
        return FiniteOperator(self._grid * Fraction(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "FiniteOperator":
        return FiniteOperator(self._grid * (1 / Fraction(scalar)))

    def __add__(self, other: "FiniteOperator") -> "FiniteOperator":
        if self.shape != other.shape:
            raise OperatorError(f"cannot add shapes {self.shape} and {other.shape}")
        return FiniteOperator(self._grid + other._grid)

    def __sub__(self, other: "FiniteOperator") -> "FiniteOperator":
        return self + (-other)

    def __neg__(self) -> "FiniteOperator":
        return FiniteOperator(-self._grid)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteOperator):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._grid == other._grid))

    __hash__ = None  # type: ignore[assignment]

    def power(self, k: int) -> "FiniteOperator":
        base = self if k >= 0 else self.inverse()
        result = FiniteOperator.identity(self.dim)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def is_identity(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self == FiniteOperator.identity(rows)

    def inverse(self) -> "FiniteOperator":
        """Inversa esatta per eliminazione di Gauss-Jordan su [M | I]"""
        dim = self.dim
        work = np.hstack((self._grid.copy(), FiniteOperator.identity(dim)._grid.copy()))

        for i in range(dim):
            pivot = next((r for r in range(i, dim) if work[r, i] != 0), None)
            if pivot is None:
                raise OperatorError("operator is singular")
            if pivot != i:
                work[[i, pivot]] = work[[pivot, i]]
            work[i, :] = work[i, :] / work[i, i]
            for r in range(dim):
                if r != i and work[r, i] != 0:
                    work[r, :] = work[r, :] - work[r, i] * work[i, :]

        return FiniteOperator(work[:, dim:])

    # --- azione sui polinomi -------------------------------------------
    def apply(self, p: Polynomial) -> Polynomial:
        rows, cols = self.shape
        if p.degree >= cols:
            raise DegreeError(f"degree {p.degree} does not fit operator with {cols} columns")
        vector = np.array(p.padded(cols), dtype=object)
        return Polynomial(self._grid.dot(vector))

    def render_rows(self) -> List[List[str]]:
        return [[format_rational(v) for v in row] for row in self._grid]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(row) for row in self.render_rows())
        return f"FiniteOperator[{body}]"


def product(factors: Iterable[FiniteOperator]) -> FiniteOperator:
    """Prodotto ordinato M1 M2 ... Mk"""
    factors = list(factors)
    if not factors:
        raise OperatorError("empty operator product")
    result = factors[0]
    for factor in factors[1:]:
        result = result @ factor
    return result
