"""Exact linear algebra: examples plus algebraic invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liebider.linalg import (
    AmbientMismatch,
    Matrix,
    Subspace,
    SubspaceRelation,
    kernel_basis,
    rref,
    solve_linear,
    subspace_combine,
    subspace_compare,
)

F = Fraction


# ---------------------------------------------------------------------------
# Strategies

entries = st.builds(
    F,
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=1, max_value=3),
)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    data = draw(
        st.lists(
            st.lists(entries, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return Matrix.from_rows(data)


@st.composite
def vector_lists(draw, ambient=4, max_count=4):
    count = draw(st.integers(min_value=0, max_value=max_count))
    return draw(
        st.lists(
            st.lists(entries, min_size=ambient, max_size=ambient),
            min_size=count,
            max_size=count,
        )
    )


# ---------------------------------------------------------------------------
# Matrix basics


def test_matrix_arithmetic_and_shapes():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.identity(2)
    assert a * b == a
    assert (a - a).is_zero()
    assert (a + a) == 2 * a
    assert a.transpose().transpose() == a
    assert a.apply((1, 0)) == (F(1), F(3))
    assert a.trace() == 5
    assert Matrix.from_flat(a.flatten(), 2, 2) == a
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        a * Matrix.zeros(3, 3)


def test_rref_examples():
    r, pivots, rank = rref(Matrix.zeros(2, 2))
    assert rank == 0 and pivots == () and r.is_zero()
    r, pivots, rank = rref(Matrix.from_rows([[0, 1], [1, 0]]))
    assert r == Matrix.identity(2) and rank == 2
    r, pivots, rank = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert r == Matrix.from_rows([[1, 2], [0, 0]])
    assert pivots == (0,) and rank == 1
    # fractional pivots normalize exactly
    r, _, _ = rref(Matrix.from_rows([[F(1, 2), F(1, 3)]]))
    assert r == Matrix.from_rows([[1, F(2, 3)]])


def test_kernel_examples():
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k.dim == 1
    assert k.basis == ((F(1), F(-1)),)
    assert kernel_basis(Matrix.identity(3)).dim == 0
    full = kernel_basis(Matrix.zeros(2, 3))
    assert full.dim == 3
    assert full == Subspace.full(3)


def test_solve_examples():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    x = solve_linear(m, (5, 11))
    assert x is not None and m.apply(x) == (F(5), F(11))
    assert solve_linear(Matrix.from_rows([[1, 1], [1, 1]]), (0, 1)) is None
    # underdetermined: free variables are zero
    x = solve_linear(Matrix.from_rows([[1, 1]]), (7,))
    assert x == (F(7), F(0))
    with pytest.raises(ValueError):
        solve_linear(m, (1,))


def test_subspace_membership_and_coefficients():
    s = Subspace.span([(1, 0, 1), (0, 1, 1)], 3)
    assert s.dim == 2
    assert s.contains((1, 1, 2))
    assert not s.contains((1, 1, 3))
    coeffs = s.coefficients_of((2, 3, 5))
    assert coeffs is not None
    rebuilt = [F(0)] * 3
    for c, row in zip(coeffs, s.basis):
        for t in range(3):
            rebuilt[t] += c * row[t]
    assert tuple(rebuilt) == (F(2), F(3), F(5))
    with pytest.raises(AmbientMismatch):
        s.contains((1, 0))


def test_subspace_compare_relations():
    plane = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    line = Subspace.span([(1, 1, 0)], 3)
    other = Subspace.span([(0, 0, 1)], 3)
    assert subspace_compare(plane, plane) is SubspaceRelation.EQUAL
    assert subspace_compare(line, plane) is SubspaceRelation.LEFT_IN_RIGHT
    assert subspace_compare(plane, line) is SubspaceRelation.RIGHT_IN_LEFT
    assert subspace_compare(line, other) is SubspaceRelation.INCOMPARABLE
    with pytest.raises(AmbientMismatch):
        subspace_compare(line, Subspace.zero(2))


def test_subspace_combine_examples():
    a = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    b = Subspace.span([(0, 1, 0), (0, 0, 1)], 3)
    total, inter = subspace_combine(a, b)
    assert total == Subspace.full(3)
    assert inter == Subspace.span([(0, 1, 0)], 3)
    total, inter = subspace_combine(a, Subspace.zero(3))
    assert total == a and inter.dim == 0


# ---------------------------------------------------------------------------
# Invariants


@given(matrices())
def test_rref_is_idempotent(m):
    r, pivots, rank = rref(m)
    r2, pivots2, rank2 = rref(r)
    assert (r2, pivots2, rank2) == (r, pivots, rank)


@given(matrices())
def test_rank_nullity(m):
    _, _, rank = rref(m)
    assert rank + kernel_basis(m).dim == m.ncols


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    for v in kernel_basis(m).basis:
        assert all(x == 0 for x in m.apply(v))


@given(matrices(), st.data())
def test_solve_reproduces_constructed_rhs(m, data):
    x = data.draw(
        st.lists(entries, min_size=m.ncols, max_size=m.ncols), label="x"
    )
    rhs = m.apply(x)
    solution = solve_linear(m, rhs)
    assert solution is not None
    assert m.apply(solution) == rhs


@given(vector_lists(), vector_lists())
def test_combine_dimension_formula(lvecs, rvecs):
    s = Subspace.span(lvecs, 4)
    t = Subspace.span(rvecs, 4)
    total, inter = subspace_combine(s, t)
    assert total.dim + inter.dim == s.dim + t.dim
    for v in s.basis + t.basis:
        assert total.contains(v)
    for v in inter.basis:
        assert s.contains(v) and t.contains(v)


@given(vector_lists(), st.randoms(use_true_random=False))
def test_span_is_canonical_under_row_operations(vecs, rng):
    s = Subspace.span(vecs, 4)
    mangled = [list(v) for v in vecs]
    rng.shuffle(mangled)
    if len(mangled) >= 2:
        # add a multiple of one generator to another: same span
        mangled[0] = [
            a + 3 * b for a, b in zip(mangled[0], mangled[1])
        ]
    if mangled:
        mangled.append([2 * a for a in mangled[0]])
    assert Subspace.span(mangled, 4) == s
