"""Derivations and related linear-map spaces of a Lie algebra.

A linear map D is a derivation when D[x, y] = [Dx, y] + [x, Dy]; on a basis
this is one linear condition per pair i < j and output coordinate r, with
the n^2 matrix entries of D as unknowns.  Maps are flattened row-major:
entry (a, b) of the matrix sits at position a*n + b.

Alongside the derivation space the module computes the inner derivations
(spanned by the adjoint maps), a completeness report (trivial center and
every derivation inner), and the solution spaces of the commuting-map
condition [f(x), y] = [x, f(y)] and its skew variant
[f(x), y] = -[x, f(y)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .liealg import LieAlgebra, adjoint_matrix
from .linalg import (
    Matrix,
    Scalar,
    Subspace,
    SubspaceRelation,
    Vector,
    as_vector,
    kernel_of_rows,
    solve_linear,
    subspace_compare,
)
from .liealg import center as center_space


class CenterNonzero(ValueError):
    """Adjoint preimages are only well defined when the center is zero."""


class NotInner(ValueError):
    """The given matrix is not the adjoint of any element."""


def _leibniz_rows(alg: LieAlgebra) -> list[dict[int, Fraction]]:
    """Sparse rows of the derivation system, ordered by (i, j, r), i < j."""
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            pair = alg.pair_terms(i, j)
            for r in range(n):
                row: dict[int, Fraction] = {}
                for t, c in pair:
                    col = r * n + t
                    row[col] = row.get(col, Fraction(0)) + c
                for t, c in alg._right_out.get((j, r), ()):
                    col = t * n + i
                    row[col] = row.get(col, Fraction(0)) - c
                for t, c in alg._left_out.get((i, r), ()):
                    col = t * n + j
                    row[col] = row.get(col, Fraction(0)) - c
                rows.append({c: v for c, v in row.items() if v})
    return rows


def derivation_space(alg: LieAlgebra) -> Subspace:
    """Canonical subspace of Q^(n^2) of all derivations (row-major maps)."""
    return kernel_of_rows(_leibniz_rows(alg), alg.dim * alg.dim)


def inner_derivation_space(alg: LieAlgebra) -> Subspace:
    """Span of the adjoint matrices ad_{e_i}, flattened row-major."""
    n = alg.dim
    vectors = [
        adjoint_matrix(alg, alg.basis_element(i)).flatten() for i in range(n)
    ]
    return Subspace.span(vectors, n * n)


@dataclass(frozen=True)
class CompletenessReport:
    """Whether the algebra is complete: zero center and Der = ad."""

    complete: bool
    center_dim: int
    derivation_dim: int
    inner_dim: int


def is_complete(alg: LieAlgebra) -> CompletenessReport:
    c_dim = center_space(alg).dim
    der = derivation_space(alg)
    inner = inner_derivation_space(alg)
    relation = subspace_compare(der, inner)
    complete = c_dim == 0 and relation is SubspaceRelation.EQUAL
    return CompletenessReport(complete, c_dim, der.dim, inner.dim)


def commuting_map_space(alg: LieAlgebra) -> Subspace:
    """Maps f with [f(x), y] = [x, f(y)] for all x, y.

    The defect g(x, y) = [f(x), y] - [x, f(y)] is symmetric in (x, y), so
    the basis pairs i <= j carry all constraints: the diagonal conditions
    [f(e_i), e_i] = 0 are genuine and are included.
    """
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(i, n):
            for r in range(n):
                row: dict[int, Fraction] = {}
                for t, c in alg._right_out.get((j, r), ()):
                    col = t * n + i
                    row[col] = row.get(col, Fraction(0)) + c
                for t, c in alg._left_out.get((i, r), ()):
                    col = t * n + j
                    row[col] = row.get(col, Fraction(0)) - c
                rows.append({c: v for c, v in row.items() if v})
    return kernel_of_rows(rows, n * n)


def skew_commuting_map_space(alg: LieAlgebra) -> Subspace:
    """Maps f with [f(x), y] = -[x, f(y)] for all x, y.

    The defect here is antisymmetric, so diagonal pairs are vacuous; rows
    are still emitted for every ordered pair (i, j), which only adds
    harmless duplicates and zero rows.
    """
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(n):
            for r in range(n):
                row: dict[int, Fraction] = {}
                for t, c in alg._right_out.get((j, r), ()):
                    col = t * n + i
                    row[col] = row.get(col, Fraction(0)) + c
                for t, c in alg._left_out.get((i, r), ()):
                    col = t * n + j
                    row[col] = row.get(col, Fraction(0)) + c
                rows.append({c: v for c, v in row.items() if v})
    return kernel_of_rows(rows, n * n)


def ad_preimage(alg: LieAlgebra, target: Matrix) -> Vector:
    """Unique u with ad_u = target, when the center is zero.

    Raises CenterNonzero when uniqueness fails a priori, and NotInner when
    ``target`` is not an adjoint matrix at all.
    """
    n = alg.dim
    if target.nrows != n or target.ncols != n:
        raise ValueError("target matrix shape does not match algebra dimension")
    if center_space(alg).dim != 0:
        raise CenterNonzero("adjoint preimage requires a trivial center")
    rows = []
    rhs = []
    for r in range(n):
        for j in range(n):
            rows.append(
                [alg.constant(i, j, r) for i in range(n)]
            )
            rhs.append(target[r][j])
    solution = solve_linear(Matrix.from_rows(rows), rhs)
    if solution is None:
        raise NotInner("matrix is not the adjoint of any element")
    return solution
