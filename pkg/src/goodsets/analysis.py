"""Goodness, fullness, boundary sets, and additive decompositions.

A finite point set S is *good* when every rational-valued function f on S
splits as f(p) = u_1(p_1) + ... + u_n(p_n) for per-axis functions u_i on the
coordinates. For finite S this is equivalent to the rows of the incidence
system being linearly independent, which is how it is decided here. When S
is not good, the witness is a nonzero left-kernel vector: weights w_p with
sum_p w_p * row(p) = 0, so any f with sum_p w_p f(p) != 0 cannot split.

A *boundary* of a good S is a set B of c - p coordinates whose values pin
the decomposition uniquely: prescribing u on B turns the underdetermined
system into one with exactly one solution. The testable criterion is that
the kernel of the incidence system projects bijectively onto B's columns.

S is *full* when it is good and c - p = n - 1, the smallest kernel a
nonempty set using all of its coordinates can have; full sets are the
maximal good sets inside the product of their own projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    EmptySetError,
    MissingBoundaryValueError,
    NotABoundaryError,
    NotGoodError,
)
from .linalg import Matrix, Rat, kernel_basis, rref, solve
from .model import CoordinateLabel, Point, PointSet, build_incidence


@dataclass
class DependenceCertificate:
    """A nonzero linear relation among the incidence rows of a point set.

    weights maps every point of the set to a rational; the weighted sum of
    incidence rows is zero and not all weights are zero.
    """

    weights: dict[Point, Fraction]

    def nonzero(self) -> dict[Point, Fraction]:
        return {p: w for p, w in self.weights.items() if w}


@dataclass
class GoodnessReport:
    is_good: bool
    point_count: int
    coordinate_count: int
    rank: int
    kernel_dim: int
    certificate: DependenceCertificate | None


@dataclass(frozen=True)
class BoundarySet:
    """A set of coordinates whose prescribed values pin a decomposition."""

    labels: tuple[CoordinateLabel, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[CoordinateLabel]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.labels


@dataclass
class Decomposition:
    """Per-axis functions u_i realizing f(p) = sum_i u_i(p_i)."""

    dimension: int
    per_axis: tuple[dict[CoordinateLabel, Fraction], ...]

    def component(self, axis: int) -> dict[CoordinateLabel, Fraction]:
        return self.per_axis[axis - 1]

    def value_at(self, point: Point) -> Fraction:
        return sum(
            (self.per_axis[lab.axis - 1][lab] for lab in point.labels), Fraction(0)
        )


def analyze_goodness(s: PointSet) -> GoodnessReport:
    """Decide goodness and attach a dependence certificate on failure.

    The certificate is the first canonical basis vector of the left kernel,
    so repeated runs on the same input produce the same witness.
    """
    inc = build_incidence(s)
    p, c = inc.matrix.shape
    _, rk, _ = rref(inc.matrix)
    if rk == p:
        return GoodnessReport(True, p, c, rk, c - rk, None)
    left = kernel_basis(inc.matrix.transpose())
    weights = dict(zip(inc.points, left[0]))
    return GoodnessReport(False, p, c, rk, c - rk, DependenceCertificate(weights))


def is_good(s: PointSet) -> bool:
    return analyze_goodness(s).is_good


def is_full(s: PointSet) -> bool:
    """Good with the minimum possible kernel: c - p = dimension - 1."""
    if len(s) == 0:
        raise EmptySetError("fullness is undefined for the empty set")
    report = analyze_goodness(s)
    return report.is_good and report.kernel_dim == s.dimension - 1


def _eliminate(row: list[Fraction], echelon: list[tuple[int, list[Fraction]]]) -> list[Fraction]:
    """Reduce `row` against rows already in echelon form (lead index, row)."""
    for lead, basis_row in echelon:
        if row[lead]:
            f = row[lead]
            row = [a - f * b for a, b in zip(row, basis_row)]
    return row


def _lead_normalize(row: list[Fraction]) -> tuple[int, list[Fraction]] | None:
    for j, x in enumerate(row):
        if x:
            return j, [a / x for a in row]
    return None


def find_boundary(s: PointSet) -> BoundarySet:
    """The lexicographically first boundary in canonical column order.

    Greedy: walk the columns in canonical order and keep each coordinate
    whose kernel row increases the rank of the rows kept so far, stopping at
    kernel_dim coordinates. Matroid exchange makes this the lex-first valid
    choice. Raises NotGoodError when `s` is not good; the empty set is good
    and gets the empty boundary.
    """
    inc = build_incidence(s)
    p, _ = inc.matrix.shape
    _, rk, _ = rref(inc.matrix)
    if rk != p:
        raise NotGoodError("only good sets have boundaries")
    kernel = kernel_basis(inc.matrix)
    want = len(kernel)
    chosen: list[CoordinateLabel] = []
    echelon: list[tuple[int, list[Fraction]]] = []
    for j, lab in enumerate(inc.labels):
        if len(chosen) == want:
            break
        row = _eliminate([v[j] for v in kernel], echelon)
        normalized = _lead_normalize(row)
        if normalized is not None:
            echelon.append(normalized)
            chosen.append(lab)
    return BoundarySet(tuple(chosen))


def is_boundary(s: PointSet, boundary: Iterable[CoordinateLabel]) -> bool:
    """True iff the kernel projects bijectively onto `boundary`'s columns.

    Wrong-size sets return False; coordinates that do not occur in `s` raise
    UnknownCoordinateError, and a not-good `s` raises NotGoodError.
    """
    inc = build_incidence(s)
    p, _ = inc.matrix.shape
    _, rk, _ = rref(inc.matrix)
    if rk != p:
        raise NotGoodError("only good sets have boundaries")
    labels = list(dict.fromkeys(boundary))
    cols = [inc.column_of(lab) for lab in labels]
    kernel = kernel_basis(inc.matrix)
    if len(labels) != len(kernel):
        return False
    if not kernel:
        return True
    restricted = Matrix.of([[v[j] for v in kernel] for j in cols], cols=len(kernel))
    _, rk_restricted, _ = rref(restricted)
    return rk_restricted == len(kernel)


def decompose(
    s: PointSet,
    values: Mapping[Point, Rat | int],
    boundary: Iterable[CoordinateLabel] | None = None,
    boundary_values: Mapping[CoordinateLabel, Rat | int] | None = None,
) -> Decomposition:
    """Solve f(p) = sum_i u_i(p_i) for the u_i, pinned by boundary values.

    `values` must assign a rational to every point of `s`. When `boundary`
    is omitted, find_boundary(s) is used; when `boundary_values` is omitted,
    the boundary coordinates are pinned to zero. The result is the unique
    exact solution and re-evaluates to f on every point.
    """
    inc = build_incidence(s)
    p, c = inc.matrix.shape
    _, rk, _ = rref(inc.matrix)
    if rk != p:
        raise NotGoodError("cannot decompose over a set that is not good")

    bset = BoundarySet(tuple(dict.fromkeys(boundary))) if boundary is not None else find_boundary(s)
    if not is_boundary(s, bset):
        raise NotABoundaryError(f"{[str(lab) for lab in bset]} is not a boundary of the set")

    pinned: dict[CoordinateLabel, Fraction] = {lab: Fraction(0) for lab in bset}
    if boundary_values is not None:
        for lab, val in boundary_values.items():
            if lab not in pinned:
                raise MissingBoundaryValueError(f"value given for non-boundary coordinate {lab}")
            pinned[lab] = Fraction(val)
        missing = [lab for lab in bset if lab not in boundary_values]
        if missing:
            raise MissingBoundaryValueError(
                "no value for boundary coordinate(s) " + ", ".join(str(m) for m in missing)
            )

    fvec = []
    for pt in s:
        if pt not in values:
            raise KeyError(f"no function value for point {pt}")
        fvec.append(Fraction(values[pt]))

    particular = solve(inc.matrix, fvec)
    assert particular is not None, "good sets always admit a particular solution"

    kernel = kernel_basis(inc.matrix)
    full_solution = list(particular)
    if kernel:
        b_cols = [inc.column_of(lab) for lab in bset]
        system = Matrix.of([[v[j] for v in kernel] for j in b_cols], cols=len(kernel))
        rhs = [pinned[lab] - particular[j] for lab, j in zip(bset, b_cols)]
        coeffs = solve(system, rhs)
        assert coeffs is not None, "boundary criterion guarantees solvability"
        for t, vec in zip(coeffs, kernel):
            if t:
                full_solution = [a + t * b for a, b in zip(full_solution, vec)]

    per_axis: tuple[dict[CoordinateLabel, Fraction], ...] = tuple(
        {} for _ in range(s.dimension)
    )
    for lab, val in zip(inc.labels, full_solution):
        per_axis[lab.axis - 1][lab] = val
    return Decomposition(s.dimension, per_axis)
