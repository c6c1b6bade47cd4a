from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from goodsets import (
    Matrix,
    NotSquareError,
    ShapeMismatchError,
    abs_row_sums,
    invert,
    kernel_basis,
    rank,
    row_sums,
    rref,
    solve,
)

F = Fraction

# the incidence matrix of the 2x2 grid {x,y} x {a,b}, whose single
# dependence (1, -1, -1, 1) is the smallest interesting kernel around
GRID = Matrix.of(
    [
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
    ]
)


def entries():
    return st.integers(min_value=-2, max_value=2)


@st.composite
def matrices(draw, max_dim=5, min_rows=0):
    r = draw(st.integers(min_rows, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(
        st.lists(
            st.lists(entries(), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
    return Matrix.of(rows, cols=c)


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x) for row in m.entries for x in row])


def test_of_rejects_ragged_and_contradictory_width():
    with pytest.raises(ShapeMismatchError):
        Matrix.of([[1, 2], [3]])
    with pytest.raises(ShapeMismatchError):
        Matrix.of([[1, 2]], cols=3)


def test_zero_row_matrix_keeps_width():
    m = Matrix.of([], cols=4)
    assert m.shape == (0, 4)
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 4


def test_matmul_shape_check():
    a = Matrix.of([[1, 2]])
    with pytest.raises(ShapeMismatchError):
        a @ a
    with pytest.raises(ShapeMismatchError):
        a.mul_vec([1, 2, 3])


def test_rref_of_grid():
    reduced, rk, pivots = rref(GRID)
    assert rk == 3
    assert pivots == (0, 1, 2)
    # last column is determined by the first three: col3 = col0 + col1 - col2
    assert reduced.column(3) == (F(1), F(1), F(-1), F(0))


def test_rank_examples():
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.of([[0, 0], [0, 0]])) == 0
    assert rank(Matrix.of([[1, 1, 1]])) == 1


def test_kernel_of_grid():
    # right kernel: the axis shift (subtract c from x and y, add c to a and b)
    assert kernel_basis(GRID) == [(F(-1), F(-1), F(1), F(1))]
    # left kernel: the alternating dependence among the four points
    assert kernel_basis(GRID.transpose()) == [(F(1), F(-1), F(-1), F(1))]


def test_kernel_empty_for_identity():
    assert kernel_basis(Matrix.identity(3)) == []


def test_solve_examples():
    assert solve(Matrix.identity(3), [1, 2, 3]) == (F(1), F(2), F(3))
    # inconsistent: the grid forces f(x,a) + f(y,b) == f(x,b) + f(y,a)
    assert solve(GRID, [1, 0, 0, 0]) is None
    # underdetermined: free variables pin to zero
    assert solve(Matrix.of([[1, 1]]), [5]) == (F(5), F(0))


def test_solve_shape_check():
    with pytest.raises(ShapeMismatchError):
        solve(Matrix.identity(2), [1, 2, 3])


def test_invert_requires_square():
    with pytest.raises(NotSquareError):
        invert(Matrix.of([[1, 2, 3]]))


def test_invert_examples():
    assert invert(Matrix.of([[0, 0], [0, 0]])) is None
    m = Matrix.of([[1, 1], [0, 1]])
    assert invert(m) == Matrix.of([[1, -1], [0, 1]])
    assert invert(Matrix.identity(5)) == Matrix.identity(5)


def test_row_sum_helpers():
    m = Matrix.of([[F(2, 3), F(-1, 3), F(1)], [0, 0, 0]])
    assert row_sums(m) == (F(4, 3), F(0))
    assert abs_row_sums(m) == (F(2), F(0))


def test_display_row_sums_to_three():
    # the row (2/3, 1/3, 1/3, 1/3, -1/3, -1/3, -2/3) keeps coming up as a
    # worked example; its absolute row sum is 3, not 8/3
    row = [F(2, 3), F(1, 3), F(1, 3), F(1, 3), F(-1, 3), F(-1, 3), F(-2, 3)]
    assert abs_row_sums(Matrix.of([row]))[0] == F(3)
    assert row_sums(Matrix.of([row]))[0] == F(1, 3)


@given(matrices())
def test_rref_is_idempotent(m):
    reduced, rk, pivots = rref(m)
    again, rk2, pivots2 = rref(reduced)
    assert again == reduced
    assert (rk, pivots) == (rk2, pivots2)


@given(matrices())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_kernel_vectors_annihilate(m):
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.mul_vec(v))


@given(matrices(min_rows=1), st.data())
def test_solve_residual_or_certified_infeasible(m, data):
    b = data.draw(
        st.lists(entries(), min_size=m.rows, max_size=m.rows), label="rhs"
    )
    x = solve(m, b)
    if x is not None:
        assert m.mul_vec(x) == tuple(F(v) for v in b)
    else:
        aug = Matrix.of([list(row) + [bv] for row, bv in zip(m.entries, b)])
        assert rank(aug) == rank(m) + 1


@st.composite
def square_matrices(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    rows = draw(
        st.lists(
            st.lists(entries(), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
    return Matrix.of(rows, cols=n)


@given(square_matrices())
def test_invert_round_trip(m):
    inv = invert(m)
    if inv is None:
        assert rank(m) < m.rows
    else:
        n = m.rows
        assert m @ inv == Matrix.identity(n)
        assert inv @ m == Matrix.identity(n)


@settings(max_examples=60)
@given(square_matrices())
def test_invert_agrees_with_sympy(m):
    ours = invert(m)
    sym = to_sympy(m)
    if sym.det() == 0:
        assert ours is None
    else:
        assert ours is not None
        assert to_sympy(ours) == sym.inv()


@settings(max_examples=60)
@given(matrices())
def test_rank_agrees_with_sympy(m):
    assert rank(m) == to_sympy(m).rank()
