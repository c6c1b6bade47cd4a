"""Exact linear algebra over the rationals.

Everything in this module works with fractions.Fraction entries and is fully
deterministic: the pivot rule is "first nonzero entry in column order", so
rref output, kernel bases, solutions, and inverses are canonical for a given
input. No floating point is used anywhere; rank decisions made here are the
ground truth for the rest of the package.

Dense representation throughout. The largest matrices this package meets are
a few hundred rows square, well within reach of exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotSquareError, ShapeMismatchError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """An immutable rectangular matrix of Fractions.

    `cols` is stored explicitly so zero-row matrices keep their width.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    @staticmethod
    def of(rows: Iterable[Iterable[Rat | int]], cols: int | None = None) -> "Matrix":
        """Build a Matrix, normalizing entries to Fraction.

        Raises ShapeMismatchError for ragged input. `cols` is required only
        when `rows` is empty.
        """
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ShapeMismatchError("ragged rows in matrix literal")
            if cols is not None and cols != width:
                raise ShapeMismatchError(f"declared {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            cols = 0
        return Matrix(data, cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
            ),
            n,
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), self.cols)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(
            tuple(tuple(row[j] for row in self.entries) for j in range(self.cols)),
            len(self.entries),
        )

    def mul_vec(self, v: Sequence[Rat]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(v)} against {self.cols} columns")
        return tuple(
            sum((a * b for a, b in zip(row, v) if a), _ZERO) for row in self.entries
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"{self.shape} @ {other.shape}")
        tcols = other.transpose().entries
        return Matrix(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col) if a), _ZERO) for col in tcols)
                for row in self.entries
            ),
            other.cols,
        )


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form of `m`.

    Returns (R, rank, pivot_cols). R is the unique RREF of `m` over the
    rationals; pivot_cols lists the pivot column indices in order, and
    rank = len(pivot_cols).
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        top = work[r]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], top)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(tuple(tuple(row) for row in work), ncols), r, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {v : Mv = 0}.

    Returns cols - rank vectors in the canonical free-variable
    parameterization induced by rref: for each non-pivot column fc, the
    vector with a 1 at fc, -R[r][fc] at each pivot column, and 0 elsewhere.
    """
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for fc in range(m.cols):
        if fc in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.entries[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence[Rat]) -> tuple[Fraction, ...] | None:
    """One exact solution of Mv = b, or None when the system is infeasible.

    The solution returned is the rref particular solution with all free
    variables pinned to zero, so identical inputs give identical outputs.
    """
    if len(b) != m.rows:
        raise ShapeMismatchError(f"right-hand side of length {len(b)} against {m.rows} rows")
    aug = Matrix.of(
        [list(row) + [bv] for row, bv in zip(m.entries, b)], cols=m.cols + 1
    )
    reduced, _, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [_ZERO] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = reduced.entries[r][m.cols]
    return tuple(x)


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None when singular.

    The product m @ inverse is re-checked against the identity before
    returning, so a returned inverse is certified, not merely computed.
    """
    if m.rows != m.cols:
        raise NotSquareError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = Matrix.of(
        [
            list(row) + [_ONE if i == j else _ZERO for j in range(n)]
            for i, row in enumerate(m.entries)
        ],
        cols=2 * n,
    )
    reduced, _, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        return None
    inverse = Matrix(tuple(row[n:] for row in reduced.entries[:n]), n)
    if (m @ inverse) != Matrix.identity(n):
        raise ArithmeticError("inverse failed certification; elimination is broken")
    return inverse


def row_sums(m: Matrix) -> tuple[Fraction, ...]:
    """Signed sum of each row's entries."""
    return tuple(sum(row, _ZERO) for row in m.entries)


def abs_row_sums(m: Matrix) -> tuple[Fraction, ...]:
    """Sum of absolute values of each row's entries."""
    return tuple(sum((abs(x) for x in row), _ZERO) for row in m.entries)
