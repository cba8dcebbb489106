import pytest
from hypothesis import given, settings, strategies as st

from sympcoh.linalg import (Matrix, Solver, Subspace, det, image_basis, invert,
                            kernel_basis, rank, ratio, rref, solve)


def M(rows):
    return Matrix(rows)


def test_rank_trivial_cases():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zeros(3, 5)) == 0
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_trivial_cases():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix.zeros(2, 3)).dim == 3
    ker = kernel_basis(M([[1, 1]]))
    assert ker.dim == 1
    v = ker.basis.column(0)
    assert v[0] == -v[1] != 0


def test_subspace_operations():
    full3 = Subspace.full(3)
    e1 = Subspace.from_columns(3, [[1, 0, 0]])
    assert full3.quotient_dim(e1) == 2
    a = Subspace.from_columns(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.from_columns(3, [[0, 1, 0], [0, 0, 1]])
    inter = a.intersection(b)
    assert inter.dim == 1 and inter.contains([0, 5, 0])
    with pytest.raises(ValueError):
        e1.quotient_dim(b)


def test_solve_small():
    assert solve(M([[2]]), [1]) == [ratio(1, 2)]
    assert solve(M([[1, 0], [0, 0]]), [0, 1]) is None


def test_solver_matches_solve():
    m = M([[1, 2, 3], [0, 1, 4]])
    s = Solver(m)
    for v in ([1, 0], [0, 1], [5, -2]):
        x = s.solve(v)
        assert m.matvec(x) == [ratio(c) for c in v]


def test_det_and_invert():
    m = M([[0, 1], [-1, 0]])
    assert det(m) == 1
    assert invert(m) @ m == Matrix.identity(2)
    with pytest.raises(ValueError):
        invert(M([[1, 2], [2, 4]]))


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def small_matrix(draw, max_dim=5):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    data = draw(st.lists(st.lists(small_entries, min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return Matrix(data)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_transpose_and_nullity(m):
    assert rank(m) == rank(m.transpose())
    assert kernel_basis(m).dim + rank(m) == m.cols


@settings(max_examples=40, deadline=None)
@given(small_matrix(), small_matrix())
def test_grassmann_identity(ma, mb):
    ambient = ma.rows
    a = image_basis(ma)
    b = Subspace.from_columns(ambient, [col[:ambient] + [0] * max(0, ambient - len(col))
                                        for col in _pad_columns(mb, ambient)])
    assert a.sum(b).dim + a.intersection(b).dim == a.dim + b.dim


def _pad_columns(m, ambient):
    cols = []
    for j in range(m.cols):
        col = m.column(j)
        col = (col + [ratio(0)] * ambient)[:ambient]
        cols.append(col)
    return cols


@settings(max_examples=40, deadline=None)
@given(small_matrix(), st.lists(small_entries, min_size=1, max_size=5))
def test_solve_is_exact(m, x):
    x = (x + [0] * m.cols)[:m.cols]
    v = m.matvec([ratio(c) for c in x])
    sol = solve(m, v)
    assert sol is not None
    assert m.matvec(sol) == v


def test_image_basis_canonical():
    a = image_basis(M([[1, 2], [2, 4], [0, 0]]))
    b = image_basis(M([[2], [4], [0]]))
    assert a == b and a.dim == 1


def test_rref_deterministic_pivoting():
    red, pivots = rref(M([[0, 1, 2], [0, 2, 4], [1, 0, 0]]))
    assert pivots == [0, 1]
    assert red.data[0][0] == 1 and red.data[1][1] == 1
