"""Points, coordinate labels, point sets, and their incidence systems.

A point in an n-fold Cartesian product is an n-tuple of opaque symbols, one
per axis. The same symbol on two different axes names two different
coordinates, so a coordinate is always the pair (axis, symbol), modeled here
as CoordinateLabel. A PointSet is a finite, duplicate-free, ordered list of
points of one common dimension; insertion order is retained because row and
column order of the derived incidence system must be reproducible.

The incidence system of a point set S is the 0/1 matrix with one row per
point and one column per distinct coordinate occurring in S; row p has a one
exactly in the columns of p's n coordinates. Columns are ordered axis-major,
by first occurrence of the symbol within its axis. Every rank statement made
elsewhere in this package is a statement about this matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    AxisOutOfRangeError,
    DimensionMismatchError,
    DuplicatePointError,
    EmptySymbolError,
    PointNotInSetError,
    UnknownCoordinateError,
)
from .linalg import Matrix


@dataclass(frozen=True)
class CoordinateLabel:
    """A coordinate symbol bound to one axis."""

    axis: int
    symbol: str

    def __str__(self) -> str:
        return f"{self.symbol}@{self.axis}"


@dataclass(frozen=True)
class Point:
    """An ordered tuple of coordinate labels, one per axis 1..n."""

    labels: tuple[CoordinateLabel, ...]

    def __post_init__(self) -> None:
        for i, lab in enumerate(self.labels, start=1):
            if lab.axis != i:
                raise AxisOutOfRangeError(
                    f"coordinate {lab} in position {i}; axes must run 1..{len(self.labels)}"
                )

    @staticmethod
    def of(symbols: Sequence[str]) -> "Point":
        """Build a point from bare symbols, assigning axes 1..n positionally.

        Symbols must be non-empty and contain no whitespace.
        """
        checked = []
        for i, sym in enumerate(symbols, start=1):
            if not isinstance(sym, str) or not sym or any(ch.isspace() for ch in sym):
                raise EmptySymbolError(f"bad symbol {sym!r} on axis {i}")
            checked.append(CoordinateLabel(i, sym))
        return Point(tuple(checked))

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def label(self, axis: int) -> CoordinateLabel:
        if not 1 <= axis <= len(self.labels):
            raise AxisOutOfRangeError(f"axis {axis} of a {len(self.labels)}-dimensional point")
        return self.labels[axis - 1]

    def symbols(self) -> tuple[str, ...]:
        return tuple(lab.symbol for lab in self.labels)

    def __str__(self) -> str:
        return "(" + ", ".join(lab.symbol for lab in self.labels) + ")"


@dataclass(frozen=True)
class PointSet:
    """A finite ordered collection of distinct points of one dimension."""

    dimension: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise DimensionMismatchError(f"dimension must be at least 2, got {self.dimension}")
        for p in self.points:
            if p.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"point {p} has dimension {p.dimension}, set has {self.dimension}"
                )
        if len(set(self.points)) != len(self.points):
            seen: set[Point] = set()
            for p in self.points:
                if p in seen:
                    raise DuplicatePointError(f"duplicate point {p}")
                seen.add(p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def index(self, point: Point) -> int:
        """Position of `point` in insertion order."""
        try:
            return self.points.index(point)
        except ValueError:
            raise PointNotInSetError(f"{point} is not in the set") from None

    def subset(self, indices: Sequence[int]) -> "PointSet":
        """The sub-point-set at the given positions, in ascending position order."""
        picked = tuple(self.points[i] for i in sorted(set(indices)))
        return PointSet(self.dimension, picked)


def point_set(rows: Sequence[Sequence[str]], dimension: int) -> PointSet:
    """Validate raw symbol rows into a PointSet.

    Each row must have exactly `dimension` symbols; duplicate rows are
    rejected. This is the single ingestion path for external data.
    """
    points = []
    for row in rows:
        if len(row) != dimension:
            raise DimensionMismatchError(
                f"point {list(row)!r} has {len(row)} entries, expected {dimension}"
            )
        points.append(Point.of(row))
    return PointSet(dimension, tuple(points))


def projection(s: PointSet, axis: int) -> tuple[CoordinateLabel, ...]:
    """Distinct coordinates of `s` on one axis, in first-occurrence order."""
    if not 1 <= axis <= s.dimension:
        raise AxisOutOfRangeError(f"axis {axis} of a {s.dimension}-dimensional set")
    out: list[CoordinateLabel] = []
    seen: set[CoordinateLabel] = set()
    for p in s:
        lab = p.labels[axis - 1]
        if lab not in seen:
            seen.add(lab)
            out.append(lab)
    return tuple(out)


def coordinate_labels(s: PointSet) -> tuple[CoordinateLabel, ...]:
    """All distinct coordinates of `s` in canonical column order.

    Canonical order is axis-major, first occurrence of the symbol within its
    axis; this is the column order of build_incidence and of every kernel
    vector and boundary report derived from it.
    """
    out: list[CoordinateLabel] = []
    for axis in range(1, s.dimension + 1):
        out.extend(projection(s, axis))
    return tuple(out)


@dataclass
class IncidenceSystem:
    """The 0/1 incidence matrix of a point set plus its row/column maps."""

    matrix: Matrix
    points: tuple[Point, ...]
    labels: tuple[CoordinateLabel, ...]

    def __post_init__(self) -> None:
        self._col = {lab: j for j, lab in enumerate(self.labels)}

    def column_of(self, label: CoordinateLabel) -> int:
        try:
            return self._col[label]
        except KeyError:
            raise UnknownCoordinateError(f"{label} does not occur in the set") from None


def build_incidence(s: PointSet) -> IncidenceSystem:
    """Incidence system of `s`: one row per point, one column per coordinate.

    Deterministic for a given input order; permuting the points permutes the
    rows identically and leaves the column map unchanged up to
    first-occurrence order.
    """
    labels = coordinate_labels(s)
    col = {lab: j for j, lab in enumerate(labels)}
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for p in s:
        row = [zero] * len(labels)
        for lab in p.labels:
            row[col[lab]] = one
        rows.append(tuple(row))
    return IncidenceSystem(Matrix(tuple(rows), len(labels)), s.points, labels)
