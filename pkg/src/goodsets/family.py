"""A three-dimensional family separating goodness from fullness at scale.

The generator builds, for each n >= 0, a chain of point sets over the ground
symbols x1, x2, x3, y1, y2, z3 and fresh symbols α1, α2, ... :

  * base(n): 3 + 5n points; always good, never full; its boundary always
    needs a coordinate from the newest five-point block,
  * five-point blocks: block m introduces exactly the five fresh symbols
    α_{5m-4} .. α_{5m}, and any k of its points use at least k of them,
  * completion(n), for n >= 1: a single extra point on existing coordinates
    whose addition makes the whole set full.

The completed set admits a square reduced incidence matrix (drop the first
point's row and the three x-columns); its exact invertibility certifies
fullness independently of the rank/count criterion. The verifiers in this
module machine-check each of these properties and report witnesses on
failure; row_sum_bound_report additionally fits two constants bounding the
per-block absolute row sums of the inverse uniformly in n.

Everything is exact; instances around n = 30 take seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .analysis import analyze_goodness, is_full
from .components import DEFAULT_CAP, enumerate_full_subset_indices, geodesic
from .errors import (
    FamilyTooSmallError,
    NegativeIndexError,
    VerificationFailedError,
)
from .linalg import Matrix, abs_row_sums, invert, kernel_basis, row_sums, rref
from .model import (
    CoordinateLabel,
    Point,
    PointSet,
    build_incidence,
    coordinate_labels,
    point_set,
)

_ALPHA_AXIS = {1: 1, 4: 1, 2: 2, 0: 2, 3: 3}


def _alpha(j: int) -> str:
    return f"α{j}"


def _alpha_label(j: int) -> CoordinateLabel:
    return CoordinateLabel(_ALPHA_AXIS[j % 5], _alpha(j))


@dataclass(frozen=True)
class FamilyInstance:
    """One generated instance: the good base, its blocks, and the completion."""

    n: int
    base: PointSet
    blocks: tuple[PointSet, ...]
    completion: Point | None
    completed: PointSet | None

    def point_name(self, index: int) -> str:
        """Stable display name for row/witness reports: p1, p2, ..., q."""
        if index < len(self.base):
            return f"p{index + 1}"
        return "q"


@dataclass
class ReducedIncidence:
    """The square submatrix certifying fullness of a completed instance.

    Rows are the completed set's points with the first point dropped;
    columns are every coordinate except the three x-symbols the first point
    pins. Each row keeps 2 or 3 ones.
    """

    matrix: Matrix
    row_points: tuple[Point, ...]
    row_names: tuple[str, ...]
    col_labels: tuple[CoordinateLabel, ...]


@dataclass
class CheckReport:
    check: str
    passed: bool
    details: dict[str, object]


@dataclass
class RowSumBoundFit:
    """Fitted constants bounding per-block absolute row sums of inverses.

    block_sums[m] is the maximum, over all instances n <= n_max with m <= n,
    of the largest absolute row sum among the five rows of block m of the
    inverse reduced matrix. The fitted constants satisfy
    block_sums[m] <= c1 + c2*(1 - 2^-m) for every m, with slack minimized.
    """

    n_max: int
    c1: Fraction
    c2: Fraction
    block_sums: dict[int, Fraction]
    per_instance: dict[int, dict[int, Fraction]]
    signed_extremes: dict[int, dict[int, Fraction]]
    row_names: tuple[str, ...]

    def bound(self, m: int) -> Fraction:
        return self.c1 + self.c2 * (1 - Fraction(1, 2**m))


def family(n: int) -> FamilyInstance:
    """Generate the instance of index n.

    The base grows by one five-point block per index. Block m >= 2 follows
    one fixed recurrence; in block 1 the two back-references that would
    reach before the fresh symbols resolve to z3 and y2, the unique choice
    consistent with the block-property invariants.
    """
    if n < 0:
        raise NegativeIndexError(f"family index must be >= 0, got {n}")
    rows: list[tuple[str, str, str]] = [
        ("x1", "x2", "x3"),
        ("y1", "y2", "x3"),
        ("y1", "x2", "z3"),
    ]
    for m in range(1, n + 1):
        back7 = "z3" if m == 1 else _alpha(5 * m - 7)
        back8 = "y2" if m == 1 else _alpha(5 * m - 8)
        rows.extend(
            [
                (_alpha(5 * m - 4), _alpha(5 * m - 3), _alpha(5 * m - 2)),
                (_alpha(5 * m - 1), _alpha(5 * m), _alpha(5 * m - 2)),
                (_alpha(5 * m - 4), _alpha(5 * m), back7),
                (_alpha(5 * m - 1), _alpha(5 * m - 3), "x3"),
                ("x1", back8, _alpha(5 * m - 2)),
            ]
        )
    base = point_set(rows, 3)
    blocks = tuple(
        PointSet(3, base.points[3 + 5 * (m - 1) : 3 + 5 * m]) for m in range(1, n + 1)
    )
    if n >= 1:
        completion = Point.of((_alpha(5 * n - 1), "y2", "z3"))
        completed = PointSet(3, base.points + (completion,))
    else:
        completion = None
        completed = None
    return FamilyInstance(n, base, blocks, completion, completed)


def reduced_incidence(inst: FamilyInstance) -> ReducedIncidence:
    """Square incidence submatrix of the completed set, size (5n+3)x(5n+3)."""
    if inst.n < 1 or inst.completed is None:
        raise FamilyTooSmallError("the reduced matrix needs a completed instance (n >= 1)")
    cols = [
        CoordinateLabel(1, "y1"),
        CoordinateLabel(2, "y2"),
        CoordinateLabel(3, "z3"),
    ] + [_alpha_label(j) for j in range(1, 5 * inst.n + 1)]
    col_index = {lab: j for j, lab in enumerate(cols)}
    points = inst.completed.points[1:]
    zero, one = Fraction(0), Fraction(1)
    entries = []
    for p in points:
        row = [zero] * len(cols)
        for lab in p.labels:
            j = col_index.get(lab)
            if j is not None:
                row[j] = one
        entries.append(tuple(row))
    names = tuple(inst.point_name(i) for i in range(1, len(inst.completed)))
    return ReducedIncidence(
        Matrix(tuple(entries), len(cols)), points, names, tuple(cols)
    )


def verify_full_via_inverse(inst: FamilyInstance) -> CheckReport:
    """Fullness of the completed set, certified two independent ways.

    The rank/count criterion (is_full) and exact invertibility of the
    reduced matrix must both hold; disagreement or joint failure raises
    VerificationFailedError naming the failing half.
    """
    reduced = reduced_incidence(inst)
    if reduced.matrix.rows == reduced.matrix.cols:
        inverse = invert(reduced.matrix)
    else:
        inverse = None
    invertible = inverse is not None
    assert inst.completed is not None
    full = is_full(inst.completed)
    details: dict[str, object] = {
        "n": inst.n,
        "size": len(reduced.row_points),
        "invertible": invertible,
        "fullByRankCount": full,
    }
    if not (invertible and full):
        raise VerificationFailedError("full-via-inverse", details)
    assert inverse is not None
    details["inverseFirstRow"] = [str(x) for x in inverse.row(0)]
    return CheckReport("full-via-inverse", True, details)


def verify_prefix_boundary(inst: FamilyInstance) -> CheckReport:
    """No boundary of the base avoids the newest block's five coordinates.

    Rank shortcut: restrict a kernel basis of the base's incidence system to
    the columns of the previous instance's coordinates; if that restriction
    has rank < 3, no 3 old coordinates can form a boundary. n = 0 passes
    vacuously (there is no previous block).
    """
    if inst.n == 0:
        return CheckReport("prefix-boundary", True, {"n": 0, "vacuous": True})
    report = analyze_goodness(inst.base)
    old_labels = set(coordinate_labels(family(inst.n - 1).base))
    inc = build_incidence(inst.base)
    kernel = kernel_basis(inc.matrix)
    old_cols = [j for j, lab in enumerate(inc.labels) if lab in old_labels]
    restricted = Matrix.of(
        [[v[j] for v in kernel] for j in old_cols], cols=len(kernel)
    )
    _, restricted_rank, _ = rref(restricted)
    details: dict[str, object] = {
        "n": inst.n,
        "good": report.is_good,
        "kernelDim": report.kernel_dim,
        "restrictedRank": restricted_rank,
        "newCoordinates": [_alpha(j) for j in range(5 * inst.n - 4, 5 * inst.n + 1)],
    }
    ok = report.is_good and report.kernel_dim == 3 and restricted_rank < 3
    if not ok:
        raise VerificationFailedError("prefix-boundary", details)
    return CheckReport("prefix-boundary", True, details)


def verify_block_properties(inst: FamilyInstance, m: int | None = None) -> CheckReport:
    """Exhaustive counting checks over the 31 non-empty subsets of a block.

    For block m: every non-empty subset E uses at least |E| of the block's
    five fresh coordinates, and for every point q of the previous base,
    at least |E| + 1 coordinates of E avoid q's coordinates.
    """
    if inst.n < 1:
        raise FamilyTooSmallError("block properties need at least one block")
    if m is not None and not 1 <= m <= inst.n:
        raise FamilyTooSmallError(f"block {m} of an instance with {inst.n} blocks")
    targets = [m] if m is not None else list(range(1, inst.n + 1))
    checked = 0
    for bm in targets:
        block = inst.blocks[bm - 1]
        prev = family(bm - 1).base
        prev_coords = set(coordinate_labels(prev))
        fresh = {_alpha_label(j) for j in range(5 * bm - 4, 5 * bm + 1)}
        for k in range(1, 6):
            for subset in combinations(block.points, k):
                used = {lab for p in subset for lab in p.labels}
                checked += 1
                if len(used & fresh) < k:
                    raise VerificationFailedError(
                        "block-properties",
                        {
                            "m": bm,
                            "property": "fresh-coordinate count",
                            "subset": [str(p) for p in subset],
                            "freshUsed": len(used & fresh),
                            "required": k,
                        },
                    )
                for q in prev:
                    avoiding = used - set(q.labels)
                    if len(avoiding) < k + 1:
                        raise VerificationFailedError(
                            "block-properties",
                            {
                                "m": bm,
                                "property": "avoiding count",
                                "subset": [str(p) for p in subset],
                                "avoidedPoint": str(q),
                                "avoiding": len(avoiding),
                                "required": k + 1,
                            },
                        )
    return CheckReport(
        "block-properties",
        True,
        {"n": inst.n, "blocksChecked": targets, "subsetsChecked": checked},
    )


def verify_no_full_subsets(inst: FamilyInstance, cap: int = DEFAULT_CAP) -> CheckReport:
    """The base contains no full subset besides the singletons (exhaustive)."""
    found = enumerate_full_subset_indices(inst.base, cap=cap)
    non_singletons = [idx for idx in found if len(idx) > 1]
    details: dict[str, object] = {
        "n": inst.n,
        "points": len(inst.base),
        "fullSubsets": len(found),
    }
    if non_singletons or len(found) != len(inst.base):
        details["counterexamples"] = [
            [inst.point_name(i) for i in idx] for idx in non_singletons[:5]
        ]
        raise VerificationFailedError("no-full-subsets", details)
    return CheckReport("no-full-subsets", True, details)


def verify_geodesic(inst: FamilyInstance, cap: int = DEFAULT_CAP) -> CheckReport:
    """The geodesic between the first and last base points is everything.

    On the completed set, the unique minimum full subset containing p1 and
    p_{5n+3} must be the completed set itself, with no alternative witness.
    """
    if inst.n < 1 or inst.completed is None:
        raise FamilyTooSmallError("the geodesic check needs a completed instance (n >= 1)")
    first = inst.base.points[0]
    last = inst.base.points[-1]
    result = geodesic(inst.completed, first, last, cap=cap)
    whole = tuple(range(len(inst.completed)))
    details: dict[str, object] = {
        "n": inst.n,
        "found": result.found,
        "size": len(result.indices) if result.indices else 0,
        "expectedSize": len(inst.completed),
        "alternatives": result.alternatives,
    }
    ok = result.found and result.indices == whole and result.alternatives == 0
    if not ok:
        raise VerificationFailedError("geodesic", details)
    return CheckReport("geodesic", True, details)


def _fit_constants(pooled: dict[int, Fraction]) -> tuple[Fraction, Fraction]:
    """Smallest (c1, c2) with c1 + c2*(1 - 2^-m) >= pooled[m] for all m.

    Exact linear program: minimize total slack over the feasible region,
    solved by enumerating candidate vertices (pairwise constraint
    intersections plus the c2 = 0 axis); ties prefer smaller c2, then c1.
    """
    ms = sorted(pooled)
    weight = {m: 1 - Fraction(1, 2**m) for m in ms}
    candidates: list[tuple[Fraction, Fraction]] = [(max(pooled.values()), Fraction(0))]
    for i, j in combinations(ms, 2):
        if weight[i] == weight[j]:
            continue
        c2 = (pooled[j] - pooled[i]) / (weight[j] - weight[i])
        if c2 < 0:
            continue
        candidates.append((pooled[i] - c2 * weight[i], c2))
    feasible = [
        (c1, c2)
        for c1, c2 in candidates
        if all(c1 + c2 * weight[m] >= pooled[m] for m in ms)
    ]

    def total_slack(pair: tuple[Fraction, Fraction]) -> Fraction:
        c1, c2 = pair
        return sum((c1 + c2 * weight[m] - pooled[m] for m in ms), Fraction(0))

    return min(feasible, key=lambda pair: (total_slack(pair), pair[1], pair[0]))


def row_sum_bound_report(n_max: int) -> RowSumBoundFit:
    """Fit and verify the uniform per-block row-sum bound up to n_max.

    For every instance n <= n_max, block m of the inverse reduced matrix is
    its five rows 5m-1 .. 5m+3 (1-based). The fitted constants must bound
    every instance's block maxima, not just the pooled ones; a violation
    raises VerificationFailedError.
    """
    if n_max < 2:
        raise FamilyTooSmallError("the bound fit needs instances up to n >= 2")
    per_instance: dict[int, dict[int, Fraction]] = {}
    signed_extremes: dict[int, dict[int, Fraction]] = {}
    row_names: tuple[str, ...] = ()
    for n in range(1, n_max + 1):
        reduced = reduced_incidence(family(n))
        inverse = invert(reduced.matrix)
        if inverse is None:
            raise VerificationFailedError("row-sum-bound", {"n": n, "invertible": False})
        sums = abs_row_sums(inverse)
        signed = row_sums(inverse)
        per_instance[n] = {}
        signed_extremes[n] = {}
        for m in range(1, n + 1):
            rows = slice(5 * m - 2, 5 * m + 3)
            per_instance[n][m] = max(sums[rows])
            signed_extremes[n][m] = max(signed[rows], key=abs)
        if n == n_max:
            row_names = reduced.row_names
    pooled = {
        m: max(per_instance[n][m] for n in range(m, n_max + 1))
        for m in range(1, n_max + 1)
    }
    c1, c2 = _fit_constants(pooled)
    for n, by_block in per_instance.items():
        for m, value in by_block.items():
            if value > c1 + c2 * (1 - Fraction(1, 2**m)):
                raise VerificationFailedError(
                    "row-sum-bound",
                    {"n": n, "m": m, "value": str(value), "c1": str(c1), "c2": str(c2)},
                )
    return RowSumBoundFit(
        n_max, c1, c2, pooled, per_instance, signed_extremes, row_names
    )
