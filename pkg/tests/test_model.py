import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from goodsets import (
    AxisOutOfRangeError,
    CoordinateLabel,
    DimensionMismatchError,
    DuplicatePointError,
    EmptySymbolError,
    Point,
    PointNotInSetError,
    PointSet,
    build_incidence,
    coordinate_labels,
    point_set,
    projection,
)

TRIPLE = [["x1", "x2", "x3"], ["y1", "y2", "x3"], ["y1", "x2", "z3"]]


def test_point_of_assigns_axes_positionally():
    p = Point.of(["a", "b", "c"])
    assert p.dimension == 3
    assert p.label(1) == CoordinateLabel(1, "a")
    assert p.label(3) == CoordinateLabel(3, "c")
    assert p.symbols() == ("a", "b", "c")
    assert str(p) == "(a, b, c)"


def test_point_label_axis_range():
    p = Point.of(["a", "b"])
    with pytest.raises(AxisOutOfRangeError):
        p.label(0)
    with pytest.raises(AxisOutOfRangeError):
        p.label(3)


def test_point_rejects_misnumbered_labels():
    with pytest.raises(AxisOutOfRangeError):
        Point((CoordinateLabel(2, "a"), CoordinateLabel(1, "b")))


@pytest.mark.parametrize("bad", ["", "a b", "a\tb", "a\n", " "])
def test_bad_symbols_rejected(bad):
    with pytest.raises(EmptySymbolError):
        Point.of(["ok", bad])


def test_same_symbol_on_two_axes_is_two_coordinates():
    s = point_set([["a", "a"]], 2)
    labs = coordinate_labels(s)
    assert labs == (CoordinateLabel(1, "a"), CoordinateLabel(2, "a"))
    assert str(labs[0]) == "a@1" and str(labs[1]) == "a@2"


def test_point_set_validation():
    s = point_set(TRIPLE, 3)
    assert len(s) == 3
    assert s.dimension == 3

    with pytest.raises(DimensionMismatchError):
        point_set([["a"]], 1)
    with pytest.raises(DimensionMismatchError):
        point_set([["a", "b", "c"], ["d", "e"]], 3)
    with pytest.raises(DuplicatePointError):
        point_set([["a", "b"], ["a", "b"]], 2)


def test_point_set_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatchError):
        PointSet(2, (Point.of(["a", "b"]), Point.of(["a", "b", "c"])))


def test_empty_set_is_allowed_and_has_no_columns():
    s = point_set([], 3)
    assert len(s) == 0
    assert coordinate_labels(s) == ()
    inc = build_incidence(s)
    assert inc.matrix.rows == 0 and inc.matrix.cols == 0


def test_index_and_subset():
    s = point_set(TRIPLE, 3)
    p = Point.of(["y1", "y2", "x3"])
    assert s.index(p) == 1
    assert p in s
    with pytest.raises(PointNotInSetError):
        s.index(Point.of(["q", "q", "q"]))
    sub = s.subset([2, 0])
    assert [str(q) for q in sub] == ["(x1, x2, x3)", "(y1, x2, z3)"]


def test_projection_first_occurrence_order():
    s = point_set(TRIPLE, 3)
    assert [lab.symbol for lab in projection(s, 1)] == ["x1", "y1"]
    assert [lab.symbol for lab in projection(s, 3)] == ["x3", "z3"]
    with pytest.raises(AxisOutOfRangeError):
        projection(s, 4)
    with pytest.raises(AxisOutOfRangeError):
        projection(s, 0)


def test_column_order_is_axis_major():
    s = point_set(TRIPLE, 3)
    labs = coordinate_labels(s)
    assert [str(lab) for lab in labs] == ["x1@1", "y1@1", "x2@2", "y2@2", "x3@3", "z3@3"]


def test_incidence_rows_have_one_entry_per_axis():
    s = point_set(TRIPLE, 3)
    inc = build_incidence(s)
    assert inc.matrix.rows == 3 and inc.matrix.cols == 6
    for i, p in enumerate(s):
        row = inc.matrix.row(i)
        assert sum(row) == 3
        for lab in p.labels:
            assert row[inc.column_of(lab)] == 1


def test_incidence_column_sums_are_symbol_multiplicities():
    s = point_set(TRIPLE, 3)
    inc = build_incidence(s)
    counts = {lab: 0 for lab in inc.labels}
    for p in s:
        for lab in p.labels:
            counts[lab] += 1
    for lab in inc.labels:
        j = inc.column_of(lab)
        assert sum(inc.matrix.row(i)[j] for i in range(len(s))) == counts[lab]


def test_projection_sizes_sum_to_column_count(fam):
    for n in range(5):
        s = fam(n).base
        total = sum(len(projection(s, a)) for a in range(1, 4))
        assert total == build_incidence(s).matrix.cols


def test_family_one_third_axis_projection(fam):
    s = fam(1).completed
    assert [lab.symbol for lab in projection(s, 3)] == ["x3", "z3", "α3"]
    inc = build_incidence(s)
    assert inc.matrix.rows == 9 and inc.matrix.cols == 11


def test_permuting_points_permutes_rows_only():
    rng = random.Random(7)
    s = point_set(TRIPLE + [["x1", "y2", "z3"]], 3)
    base = build_incidence(s)
    order = list(range(len(s)))
    for _ in range(10):
        rng.shuffle(order)
        t = PointSet(3, tuple(s.points[i] for i in order))
        inc = build_incidence(t)
        assert set(inc.labels) == set(base.labels)
        for p in t:
            row = inc.matrix.row(t.index(p))
            old = base.matrix.row(s.index(p))
            for lab in base.labels:
                assert row[inc.column_of(lab)] == old[base.column_of(lab)]


@given(st.lists(st.tuples(st.sampled_from("abcd"), st.sampled_from("pqrs")), min_size=1, max_size=10, unique=True))
def test_incidence_shape_matches_projections(pairs):
    s = point_set([[u, v] for u, v in pairs], 2)
    inc = build_incidence(s)
    assert inc.matrix.rows == len(pairs)
    assert inc.matrix.cols == len(projection(s, 1)) + len(projection(s, 2))
