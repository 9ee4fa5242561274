"""Finite-dimensional Lie algebras over the rationals by structure constants.

An algebra of dimension n is a bracket table on a fixed basis e_1..e_n:
[e_i, e_j] = sum_k c_ij^k e_k for i < j, extended by antisymmetry and
bilinearity.  Elements are plain coordinate tuples of Fractions.  The module
provides the bracket, adjoint matrices, the structure-matrix tuple
A_k = (c_ij^k)_ij, the center, the lower central series, the Killing form,
and direct sums.

Validation checks the Jacobi identity exactly on all basis triples; nothing
else in the package assumes a valid table, but every documented result does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .linalg import (
    ZERO,
    ONE,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    as_vector,
    kernel_of_rows,
    rref,
    _frac,
)

ConstantKey = tuple[int, int, int]  # (i, j, k) with i < j, zero-based


@dataclass(frozen=True)
class LieAlgebra:
    """Structure-constant presentation of a Lie algebra over Q.

    ``constants`` holds the sorted nonzero entries ((i, j, k), c) with
    i < j; the bracket of basis vectors with i >= j follows by antisymmetry.
    ``factors`` optionally records a direct-sum decomposition as consecutive
    block dimensions summing to ``dim``.
    """

    dim: int
    basis_names: tuple[str, ...]
    constants: tuple[tuple[ConstantKey, Fraction], ...]
    factors: Optional[tuple[int, ...]] = None

    @cached_property
    def _table(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        """(i, j) -> ((k, c_ij^k), ...) for all ordered pairs i != j."""
        raw: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for (i, j, k), c in self.constants:
            raw.setdefault((i, j), []).append((k, c))
            raw.setdefault((j, i), []).append((k, -c))
        return {pair: tuple(terms) for pair, terms in raw.items()}

    @cached_property
    def _left_out(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        """(i, r) -> ((t, c_it^r), ...) over all t."""
        raw: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for (i, j), terms in self._table.items():
            for k, c in terms:
                raw.setdefault((i, k), []).append((j, c))
        return {key: tuple(terms) for key, terms in raw.items()}

    @cached_property
    def _right_out(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        """(j, r) -> ((t, c_tj^r), ...) over all t."""
        raw: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for (i, j), terms in self._table.items():
            for k, c in terms:
                raw.setdefault((j, k), []).append((i, c))
        return {key: tuple(terms) for key, terms in raw.items()}

    def pair_terms(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        """Nonzero coordinates of [e_i, e_j] as ((k, c), ...)."""
        if i == j:
            return ()
        return self._table.get((i, j), ())

    def constant(self, i: int, j: int, k: int) -> Fraction:
        """c_ij^k for any i, j (antisymmetric in i, j)."""
        for kk, c in self.pair_terms(i, j):
            if kk == k:
                return c
        return ZERO

    def basis_element(self, i: int) -> Vector:
        return tuple(ONE if t == i else ZERO for t in range(self.dim))

    def block_of(self, index: int) -> int:
        """Direct-sum block containing basis index ``index`` (0 if atomic)."""
        blocks = self.factors if self.factors is not None else (self.dim,)
        start = 0
        for b, size in enumerate(blocks):
            if index < start + size:
                return b
            start += size
        raise IndexError(f"basis index {index} out of range for dim {self.dim}")


class InvalidStructure(ValueError):
    """Raised by the constructor for malformed structure-constant input."""


def lie_algebra(
    dim: int,
    constants: Mapping[ConstantKey, Scalar],
    basis_names: Optional[Sequence[str]] = None,
    factors: Optional[Sequence[int]] = None,
) -> LieAlgebra:
    """Build a :class:`LieAlgebra`, normalizing and checking the input table.

    Keys must satisfy 0 <= i < j < dim and 0 <= k < dim; zero coefficients
    are dropped.  ``factors``, when given, must be positive block sizes
    summing to ``dim``, and every constant must stay inside one block.
    """
    if dim < 0:
        raise InvalidStructure("dimension must be nonnegative")
    if basis_names is None:
        basis_names = tuple(f"e{t + 1}" for t in range(dim))
    else:
        basis_names = tuple(basis_names)
        if len(basis_names) != dim:
            raise InvalidStructure(
                f"{len(basis_names)} basis names for dimension {dim}"
            )
        if len(set(basis_names)) != dim:
            raise InvalidStructure("basis names must be distinct")
    block_of: Optional[list[int]] = None
    norm_factors: Optional[tuple[int, ...]] = None
    if factors is not None:
        norm_factors = tuple(int(f) for f in factors)
        if any(f <= 0 for f in norm_factors):
            raise InvalidStructure("factor sizes must be positive")
        if sum(norm_factors) != dim:
            raise InvalidStructure(
                f"factor sizes {norm_factors} do not sum to dimension {dim}"
            )
        block_of = []
        for b, size in enumerate(norm_factors):
            block_of.extend([b] * size)
    cleaned: dict[ConstantKey, Fraction] = {}
    for (i, j, k), raw in constants.items():
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise InvalidStructure(f"constant index ({i},{j},{k}) out of range")
        if i >= j:
            raise InvalidStructure(
                f"constant key ({i},{j},{k}) must have i < j"
            )
        c = _frac(raw)
        if not c:
            continue
        if block_of is not None and not (
            block_of[i] == block_of[j] == block_of[k]
        ):
            raise InvalidStructure(
                f"constant ({i},{j},{k}) crosses direct-sum blocks"
            )
        cleaned[(i, j, k)] = c
    table = tuple(sorted(cleaned.items()))
    return LieAlgebra(dim, basis_names, table, norm_factors)


# ---------------------------------------------------------------------------
# Bracket and adjoint


def bracket(alg: LieAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """[x, y] by bilinear extension; coordinate k equals x^T A_k y."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise ValueError("element length does not match algebra dimension")
    xv = as_vector(x)
    yv = as_vector(y)
    out = [ZERO] * alg.dim
    for i, xi in enumerate(xv):
        if not xi:
            continue
        for j, yj in enumerate(yv):
            if not yj:
                continue
            terms = alg.pair_terms(i, j)
            if terms:
                w = xi * yj
                for k, c in terms:
                    out[k] += w * c
    return tuple(out)


def adjoint_matrix(alg: LieAlgebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of ad_x = [x, -]; column j holds the coordinates of [x, e_j]."""
    n = alg.dim
    xv = as_vector(x)
    cols = [bracket(alg, xv, alg.basis_element(j)) for j in range(n)]
    return Matrix(n, n, tuple(tuple(cols[j][r] for j in range(n)) for r in range(n)))


def structure_matrices(alg: LieAlgebra) -> tuple[Matrix, ...]:
    """The tuple (A_1, ..., A_n) with (A_k)_ij = c_ij^k; each A_k is
    skew-symmetric and [x, y]_k = x^T A_k y."""
    n = alg.dim
    grids: list[list[list[Fraction]]] = [
        [[ZERO] * n for _ in range(n)] for _ in range(n)
    ]
    for (i, j, k), c in alg.constants:
        grids[k][i][j] = c
        grids[k][j][i] = -c
    return tuple(
        Matrix(n, n, tuple(tuple(row) for row in grid)) for grid in grids
    )


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class JacobiViolation:
    """First basis triple where the Jacobi identity fails."""

    i: int
    j: int
    k: int
    residual: Vector  # [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]


def validate(alg: LieAlgebra) -> Optional[JacobiViolation]:
    """Check the Jacobi identity on all basis triples i < j < k.

    Returns None when the table is a Lie algebra, otherwise the
    lexicographically first violating triple with its residual vector.
    Antisymmetry holds by construction, so triples with repeats are exact.
    """
    n = alg.dim
    basis = [alg.basis_element(t) for t in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            eij = bracket(alg, basis[i], basis[j])
            for k in range(j + 1, n):
                term1 = bracket(alg, eij, basis[k])
                term2 = bracket(alg, bracket(alg, basis[j], basis[k]), basis[i])
                term3 = bracket(alg, bracket(alg, basis[k], basis[i]), basis[j])
                residual = tuple(
                    a + b + c for a, b, c in zip(term1, term2, term3)
                )
                if any(residual):
                    return JacobiViolation(i, j, k, residual)
    return None


# ---------------------------------------------------------------------------
# Invariant subspaces and series


def center(alg: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j} as a canonical subspace of Q^n."""
    n = alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            row: dict[int, Fraction] = {}
            for t, c in alg._right_out.get((j, k), ()):
                row[t] = c
            rows.append(row)
    return kernel_of_rows(rows, n)


def derived_subalgebra(alg: LieAlgebra) -> Subspace:
    """Span of all [e_i, e_j] over pairs i < j."""
    vectors = []
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            terms = alg.pair_terms(i, j)
            if terms:
                vec = [ZERO] * n
                for k, c in terms:
                    vec[k] = c
                vectors.append(vec)
    return Subspace.span(vectors, n)


@dataclass(frozen=True)
class LowerCentralSeries:
    """Terms L^1 >= L^2 >= ... down to stabilization.

    The listed terms start at L^1 = [L, L] and include the first term that
    repeats or vanishes.  ``nilpotency_class`` is the least k with L^k = 0
    (counting L^0 = L), or None when the series stabilizes at a nonzero
    term.
    """

    terms: tuple[Subspace, ...]
    nilpotent: bool
    nilpotency_class: Optional[int]


def lower_central_series(alg: LieAlgebra) -> LowerCentralSeries:
    n = alg.dim
    if n == 0:
        return LowerCentralSeries((Subspace.zero(0),), True, 0)
    current = derived_subalgebra(alg)
    terms = [current]
    while current.dim > 0:
        vectors = []
        for i in range(n):
            ei = alg.basis_element(i)
            for v in current.basis:
                vectors.append(bracket(alg, ei, v))
        nxt = Subspace.span(vectors, n)
        terms.append(nxt)
        if nxt == current:
            break
        current = nxt
    nilpotent = terms[-1].dim == 0
    return LowerCentralSeries(
        tuple(terms), nilpotent, len(terms) if nilpotent else None
    )


@dataclass(frozen=True)
class KillingForm:
    """Killing form K_ij = trace(ad_i ad_j) with its exact rank."""

    matrix: Matrix
    rank: int
    semisimple: bool  # K nondegenerate


def killing_form(alg: LieAlgebra) -> KillingForm:
    n = alg.dim
    ads = [adjoint_matrix(alg, alg.basis_element(i)) for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append((ads[i] * ads[j]).trace())
        rows.append(tuple(row))
    k = Matrix(n, n, tuple(rows))
    _, _, rank = rref(k)
    return KillingForm(k, rank, rank == n)


# ---------------------------------------------------------------------------
# Direct sums


def direct_sum(left: LieAlgebra, right: LieAlgebra) -> LieAlgebra:
    """Direct sum with block-diagonal bracket.

    A zero-dimensional operand returns the other algebra unchanged.  Factor
    lists concatenate (atomic operands count as one block), so iterated sums
    stay flat.  On basis-name collision every name gets a block-side suffix.
    """
    if left.dim == 0:
        return right
    if right.dim == 0:
        return left
    n1, n2 = left.dim, right.dim
    names = left.basis_names + right.basis_names
    if len(set(names)) != n1 + n2:
        names = tuple(f"{t}_1" for t in left.basis_names) + tuple(
            f"{t}_2" for t in right.basis_names
        )
    constants: dict[ConstantKey, Fraction] = {
        key: c for key, c in left.constants
    }
    for (i, j, k), c in right.constants:
        constants[(i + n1, j + n1, k + n1)] = c
    f1 = left.factors if left.factors is not None else (n1,)
    f2 = right.factors if right.factors is not None else (n2,)
    return lie_algebra(n1 + n2, constants, names, f1 + f2)
