"""Full subsets, components, and geodesics by certified exhaustive search.

Full subsets of a finite set are found by depth-first enumeration over point
indices. Two facts keep this tractable around twenty points: a full subset F
must satisfy the counting condition c(F) - |F| = n - 1, which is checked
with bitmask unions before any linear algebra runs, and rank checks are only
performed on the few survivors. Beyond the cap the operations refuse loudly
rather than silently approximate.

Components come from the full-subset list by union-find: points that
co-occur in some full subset land in one class, and classes are closed
transitively. For finite sets the classes of this relation are exactly the
maximal full subsets, so full components and related components coincide;
full_components re-checks fullness of every block rather than assuming it.

A geodesic between two points is a minimum-cardinality full subset
containing both, searched ascending by size, ties broken by lexicographic
index order. The count of other same-size witnesses is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .analysis import is_good
from .errors import NotGoodError, SetTooLargeError
from .model import Point, PointSet, build_incidence

DEFAULT_CAP = 22

_ZERO = Fraction(0)


@dataclass
class Partition:
    """Disjoint blocks covering a point set, as sub-sets and index tuples."""

    blocks: tuple[PointSet, ...]
    index_blocks: tuple[tuple[int, ...], ...]

    def block_count(self) -> int:
        return len(self.blocks)


@dataclass
class GeodesicResult:
    found: bool
    endpoints: tuple[Point, Point]
    subset: PointSet | None
    indices: tuple[int, ...] | None
    alternatives: int
    minimal: bool


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise SetTooLargeError(
            f"{size} points exceeds the enumeration cap of {cap}; "
            "pass a larger cap to search anyway (runtime grows exponentially)"
        )


def _column_masks(s: PointSet) -> list[int]:
    """Per-point bitmask over canonical incidence columns."""
    inc = build_incidence(s)
    col = {lab: j for j, lab in enumerate(inc.labels)}
    return [
        sum(1 << col[lab] for lab in p.labels) for p in s
    ]


def _independent(rows: list[list[Fraction]]) -> bool:
    """True iff the rows are linearly independent (incremental elimination)."""
    echelon: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        row = row[:]
        for lead, base in echelon:
            if row[lead]:
                f = row[lead]
                row = [a - f * b for a, b in zip(row, base)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            return False
        pivot = row[lead]
        echelon.append((lead, [x / pivot if x else x for x in row]))
    return True


class _FullChecker:
    """Shared machinery for deciding fullness of index subsets of one set."""

    def __init__(self, s: PointSet):
        self.n = s.dimension
        self.masks = _column_masks(s)
        self.point_cols = [
            [j for j in range(m.bit_length()) if m >> j & 1] for m in self.masks
        ]

    def union_mask(self, indices: tuple[int, ...]) -> int:
        mask = 0
        for i in indices:
            mask |= self.masks[i]
        return mask

    def counts_ok(self, indices: tuple[int, ...], mask: int) -> bool:
        return mask.bit_count() - len(indices) == self.n - 1

    def rows_independent(self, indices: tuple[int, ...], mask: int) -> bool:
        cols = [j for j in range(mask.bit_length()) if mask >> j & 1]
        pos = {j: k for k, j in enumerate(cols)}
        rows = []
        one = Fraction(1)
        for i in indices:
            row = [_ZERO] * len(cols)
            for j in self.point_cols[i]:
                row[pos[j]] = one
            rows.append(row)
        return _independent(rows)

    def is_full_subset(self, indices: tuple[int, ...]) -> bool:
        mask = self.union_mask(indices)
        return self.counts_ok(indices, mask) and self.rows_independent(indices, mask)


def enumerate_full_subset_indices(
    s: PointSet, max_size: int | None = None, cap: int = DEFAULT_CAP
) -> list[tuple[int, ...]]:
    """Index tuples of all non-empty full subsets of `s` up to max_size.

    Results are in canonical order: ascending size, then lexicographic.
    """
    p = len(s)
    _check_cap(p, cap)
    if max_size is None or max_size > p:
        max_size = p
    checker = _FullChecker(s)
    masks = checker.masks
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int, mask: int) -> None:
        for i in range(start, p):
            chosen.append(i)
            merged = mask | masks[i]
            idx = tuple(chosen)
            if checker.counts_ok(idx, merged) and checker.rows_independent(idx, merged):
                found.append(idx)
            if len(chosen) < max_size:
                extend(i + 1, merged)
            chosen.pop()

    if max_size >= 1:
        extend(0, 0)
    found.sort(key=lambda idx: (len(idx), idx))
    return found


def enumerate_full_subsets(
    s: PointSet, max_size: int | None = None, cap: int = DEFAULT_CAP
) -> list[PointSet]:
    """All non-empty full subsets of `s` with size <= max_size, canonical order."""
    return [s.subset(idx) for idx in enumerate_full_subset_indices(s, max_size, cap)]


def _merged_classes(s: PointSet, cap: int) -> tuple[tuple[int, ...], ...]:
    """Union-find closure of "co-occurs in some full subset"."""
    p = len(s)
    parent = list(range(p))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for idx in enumerate_full_subset_indices(s, None, cap):
        root = find(idx[0])
        for i in idx[1:]:
            r = find(i)
            if r != root:
                parent[r] = root

    classes: dict[int, list[int]] = {}
    for i in range(p):
        classes.setdefault(find(i), []).append(i)
    return tuple(tuple(block) for block in sorted(classes.values()))


def _require_good(s: PointSet) -> None:
    if not is_good(s):
        raise NotGoodError("components are defined for good sets only")


def related_components(s: PointSet, cap: int = DEFAULT_CAP) -> Partition:
    """Equivalence classes of "some full subset contains both points".

    The relation is closed transitively; blocks are ordered by smallest
    point index.
    """
    _require_good(s)
    _check_cap(len(s), cap)
    index_blocks = _merged_classes(s, cap)
    return Partition(tuple(s.subset(b) for b in index_blocks), index_blocks)


def full_components(s: PointSet, cap: int = DEFAULT_CAP) -> Partition:
    """The partition of a good set into maximal full subsets.

    Computed by the same merge as related_components (for finite sets the
    two notions coincide); every block is then re-checked to be full.
    """
    _require_good(s)
    _check_cap(len(s), cap)
    index_blocks = _merged_classes(s, cap)
    checker = _FullChecker(s)
    for block in index_blocks:
        if not checker.is_full_subset(block):
            raise AssertionError(
                f"component block {block} is not full; merge invariant violated"
            )
    return Partition(tuple(s.subset(b) for b in index_blocks), index_blocks)


def geodesic(s: PointSet, x: Point, y: Point, cap: int = DEFAULT_CAP) -> GeodesicResult:
    """A minimum-cardinality full subset of `s` containing `x` and `y`.

    Searches ascending by size, so the first size with any witness is
    minimal; among same-size witnesses the lexicographically first index
    tuple is returned and the others are counted as alternatives. Minimality
    of the returned subset is re-verified point by point before returning.
    """
    p = len(s)
    _check_cap(p, cap)
    ix, iy = s.index(x), s.index(y)
    endpoints = tuple(sorted({ix, iy}))
    checker = _FullChecker(s)
    base_mask = checker.union_mask(endpoints)
    rest = [i for i in range(p) if i not in endpoints]

    for size in range(len(endpoints), p + 1):
        hits: list[tuple[int, ...]] = []
        for extra in combinations(rest, size - len(endpoints)):
            idx = tuple(sorted(endpoints + extra))
            mask = base_mask | checker.union_mask(extra)
            if checker.counts_ok(idx, mask) and checker.rows_independent(idx, mask):
                hits.append(idx)
        if hits:
            hits.sort()
            chosen = hits[0]
            for i in chosen:
                if i in endpoints:
                    continue
                smaller = tuple(j for j in chosen if j != i)
                if checker.is_full_subset(smaller):
                    raise AssertionError(
                        "ascending search returned a non-minimal geodesic"
                    )
            return GeodesicResult(
                found=True,
                endpoints=(x, y),
                subset=s.subset(chosen),
                indices=chosen,
                alternatives=len(hits) - 1,
                minimal=True,
            )
    return GeodesicResult(
        found=False,
        endpoints=(x, y),
        subset=None,
        indices=None,
        alternatives=0,
        minimal=False,
    )
