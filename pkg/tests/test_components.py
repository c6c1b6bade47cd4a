import random

import pytest

from goodsets import (
    DEFAULT_CAP,
    NotGoodError,
    Point,
    PointNotInSetError,
    SetTooLargeError,
    enumerate_full_subset_indices,
    enumerate_full_subsets,
    full_components,
    geodesic,
    is_full,
    point_set,
    related_components,
)
from oracles import (
    bipartite_is_acyclic,
    brute_force_full_subsets,
    random_good_set,
    tree_path_edges,
)

STAR = point_set([["c", "1"], ["c", "2"], ["c", "3"]], 2)
FOREST = point_set(
    [["a", "p"], ["b", "p"], ["b", "q"], ["u", "r"], ["v", "r"]], 2
)
GRID = point_set([["x", "a"], ["x", "b"], ["y", "a"], ["y", "b"]], 2)


def test_default_cap_value():
    assert DEFAULT_CAP == 22


def test_star_has_every_subset_full():
    subs = enumerate_full_subset_indices(STAR)
    assert len(subs) == 7  # every nonempty subset of a star is a tree
    for idx in subs:
        assert is_full(STAR.subset(idx))


def test_enumeration_order_is_size_then_lex():
    subs = enumerate_full_subset_indices(STAR)
    assert subs == [
        (0,), (1,), (2,),
        (0, 1), (0, 2), (1, 2),
        (0, 1, 2),
    ]


def test_enumerate_full_subsets_wraps_indices():
    sets = enumerate_full_subsets(STAR, max_size=1)
    assert [len(t) for t in sets] == [1, 1, 1]
    assert [t.points[0] for t in sets] == list(STAR.points)


def test_family_sets_have_trivial_census_below_completion(fam):
    # only singletons below the completion; the completed set adds exactly
    # one more full subset, namely itself
    d1 = fam(1).base
    assert enumerate_full_subset_indices(d1) == [(i,) for i in range(8)]
    f1 = fam(1).completed
    subs = enumerate_full_subset_indices(f1)
    assert subs == [(i,) for i in range(9)] + [tuple(range(9))]


def test_max_size_limits_search(fam):
    f1 = fam(1).completed
    assert enumerate_full_subset_indices(f1, max_size=1) == [(i,) for i in range(9)]
    assert enumerate_full_subset_indices(f1, max_size=8) == [(i,) for i in range(9)]


def test_enumeration_matches_brute_force(fam):
    assert enumerate_full_subset_indices(fam(1).completed) == brute_force_full_subsets(
        fam(1).completed
    )
    rng = random.Random(11)
    for dim in (2, 3):
        s = random_good_set(rng, dim, 9)
        assert enumerate_full_subset_indices(s) == brute_force_full_subsets(s)


def test_cap_is_enforced_and_overridable(fam):
    d1 = fam(1).base  # 8 points
    with pytest.raises(SetTooLargeError):
        enumerate_full_subset_indices(d1, cap=5)
    with pytest.raises(SetTooLargeError):
        related_components(d1, cap=5)
    with pytest.raises(SetTooLargeError):
        full_components(d1, cap=5)
    with pytest.raises(SetTooLargeError):
        geodesic(d1, d1.points[0], d1.points[1], cap=5)
    assert len(enumerate_full_subset_indices(d1, cap=8)) == 8


def test_components_require_goodness():
    with pytest.raises(NotGoodError):
        full_components(GRID)
    with pytest.raises(NotGoodError):
        related_components(GRID)


def test_components_of_family_sets(fam):
    d2 = fam(2).base
    part = full_components(d2)
    assert part.block_count() == len(d2)
    assert all(len(b) == 1 for b in part.blocks)

    f1 = fam(1).completed
    part = full_components(f1)
    assert part.block_count() == 1
    assert part.index_blocks == (tuple(range(9)),)
    assert part.blocks[0].points == f1.points


def test_forest_components_follow_the_trees():
    part = full_components(FOREST)
    assert part.index_blocks == ((0, 1, 2), (3, 4))
    for block in part.blocks:
        assert is_full(block)


def test_related_equals_full_on_small_instances(fam):
    rng = random.Random(5)
    instances = [STAR, FOREST, fam(1).completed, fam(2).base]
    instances += [random_good_set(rng, d, 8) for d in (2, 3, 4)]
    for s in instances:
        if len(s) == 0:
            continue
        assert related_components(s).index_blocks == full_components(s).index_blocks


def test_blocks_partition_the_set(fam):
    for s in (FOREST, fam(1).completed, fam(2).base):
        part = full_components(s)
        seen = [i for block in part.index_blocks for i in block]
        assert sorted(seen) == list(range(len(s)))
        assert len(seen) == len(set(seen))
        # blocks are ordered by their smallest member
        firsts = [block[0] for block in part.index_blocks]
        assert firsts == sorted(firsts)


def test_geodesic_spans_the_whole_completion(fam):
    f1 = fam(1).completed
    a1, a8 = f1.points[0], f1.points[7]
    res = geodesic(f1, a1, a8)
    assert res.found and res.minimal
    assert res.indices == tuple(range(9))
    assert res.subset.points == f1.points
    assert res.alternatives == 0
    # even adjacent base points need the entire set
    res2 = geodesic(f1, f1.points[0], f1.points[1])
    assert res2.found and res2.indices == tuple(range(9))


def test_geodesic_absent_when_no_full_superset(fam):
    d1 = fam(1).base
    res = geodesic(d1, d1.points[0], d1.points[1])
    assert not res.found
    assert res.subset is None and res.indices is None
    assert res.alternatives == 0


def test_geodesic_trivial_cases():
    p = STAR.points[0]
    res = geodesic(STAR, p, p)
    assert res.found and res.indices == (0,)
    res = geodesic(STAR, STAR.points[0], STAR.points[2])
    assert res.found and res.indices == (0, 2)
    assert res.alternatives == 0


def test_geodesic_unknown_endpoint():
    with pytest.raises(PointNotInSetError):
        geodesic(STAR, Point.of(["zz", "1"]), STAR.points[0])


def test_geodesic_matches_tree_path_oracle():
    # in dimension 2 the minimum full subset through two edges is the pair
    # plus the unique path between them, which BFS finds independently
    rng = random.Random(99)
    checked = 0
    for _ in range(25):
        s = random_good_set(rng, 2, 10)
        if len(s) < 2 or not bipartite_is_acyclic(s):
            continue
        i, j = rng.sample(range(len(s)), 2)
        expected = tree_path_edges(s, i, j)
        res = geodesic(s, s.points[i], s.points[j])
        if expected is None:
            assert not res.found
        else:
            assert res.found
            assert set(res.indices) == expected
            assert res.alternatives == 0
            assert res.minimal
        checked += 1
    assert checked >= 20
