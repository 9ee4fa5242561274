"""Matrix spaces attached to the structure matrices A_1, ..., A_n.

V is the space of matrices M such that M A_i = A_i Q holds for a single
matrix Q and every i; V+ and V- are the members for which every product
M A_i is symmetric (respectively skew-symmetric).  Because each A_i is
skew-symmetric, V+ and V- always sit inside V; on complete algebras
V = V+ (+) V- is a direct sum, and the correspondence M = phi^T links V to
the biderivation space: the coordinate matrices of a biderivation with
factorization B(x, y) = [phi(x), y] are B_k = phi^T A_k.

Matrices are flattened row-major (entry (a, b) at a*n + b) throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .liealg import LieAlgebra, structure_matrices
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    kernel_of_rows,
    solve_linear,
    subspace_combine,
)
from .derivations import is_complete
from .biderivations import (
    InternalInconsistency,
    biderivation_space,
    extract_phi_psi,
)
from .liealg import killing_form


@dataclass(frozen=True)
class MatrixSubspace:
    """A subspace of n x n matrices, stored flattened row-major."""

    n: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> tuple[Matrix, ...]:
        return tuple(
            Matrix.from_flat(v, self.n, self.n) for v in self.space.basis
        )

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flatten())


def _joint_intertwiner_kernel(alg: LieAlgebra) -> Subspace:
    """Kernel of M A_i - A_i Q = 0 over the stacked unknowns (M, Q).

    Unknowns: M_ab at a*n + b, Q_ab at n^2 + a*n + b.  Rows are ordered by
    (i, a, b) for the (a, b) entry of the i-th matrix equation.
    """
    n = alg.dim
    mats = structure_matrices(alg)
    nn = n * n
    rows = []
    for i in range(n):
        ai = mats[i]
        for a in range(n):
            for b in range(n):
                row: dict[int, Fraction] = {}
                # (M A_i)_ab = sum_s M_as (A_i)_sb
                for s in range(n):
                    c = ai[s][b]
                    if c:
                        row[a * n + s] = row.get(a * n + s, ZERO) + c
                # -(A_i Q)_ab = -sum_s (A_i)_as Q_sb
                for s in range(n):
                    c = ai[a][s]
                    if c:
                        col = nn + s * n + b
                        row[col] = row.get(col, ZERO) - c
                rows.append({c: v for c, v in row.items() if v})
    return kernel_of_rows(rows, 2 * nn)


@dataclass(frozen=True)
class VSpace:
    """V with one witness Q per canonical basis matrix M (M A_i = A_i Q)."""

    matrices: MatrixSubspace
    witnesses: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return self.matrices.dim


def compute_V(alg: LieAlgebra) -> VSpace:
    """The space V = {M : exists Q with M A_i = A_i Q for all i}.

    The joint (M, Q) kernel is projected to the M block and canonicalized;
    each canonical basis matrix gets a witness Q solved with free variables
    set to zero.
    """
    n = alg.dim
    nn = n * n
    joint = _joint_intertwiner_kernel(alg)
    m_block = Subspace.span([v[:nn] for v in joint.basis], nn)
    mats = structure_matrices(alg)
    # Witness system: row (i, a, b) states (A_i Q)_ab = (M A_i)_ab.
    coeff_rows = []
    for i in range(n):
        ai = mats[i]
        for a in range(n):
            for b in range(n):
                row = [ZERO] * nn
                for s in range(n):
                    if ai[a][s]:
                        row[s * n + b] = ai[a][s]
                coeff_rows.append(row)
    system = Matrix.from_rows(coeff_rows)
    witnesses = []
    for flat in m_block.basis:
        m = Matrix.from_flat(flat, n, n)
        rhs = []
        for i in range(n):
            prod = m * mats[i]
            for a in range(n):
                for b in range(n):
                    rhs.append(prod[a][b])
        q = solve_linear(system, rhs)
        if q is None:
            raise InternalInconsistency(
                "projected V member has no intertwining witness"
            )
        witnesses.append(Matrix.from_flat(q, n, n))
    return VSpace(MatrixSubspace(n, m_block), tuple(witnesses))


def compute_Vpm(alg: LieAlgebra) -> tuple[MatrixSubspace, MatrixSubspace]:
    """(V+, V-): members of V with every M A_i symmetric resp. skew.

    The symmetry conditions alone already force membership in V (each A_i
    is skew-symmetric, so Q = -M^T resp. Q = M^T intertwines); the spaces
    are nevertheless intersected with V explicitly.
    """
    n = alg.dim
    nn = n * n
    mats = structure_matrices(alg)
    v_space = compute_V(alg).matrices.space

    def condition_kernel(sign: int) -> Subspace:
        # (M A_i)_ba - sign * (M A_i)_ab = 0 for a <= b; sign +1 symmetric.
        rows = []
        for i in range(n):
            ai = mats[i]
            for a in range(n):
                for b in range(a, n):
                    row: dict[int, Fraction] = {}
                    for s in range(n):
                        c = ai[s][a]
                        if c:
                            col = b * n + s
                            row[col] = row.get(col, ZERO) + c
                        d = ai[s][b]
                        if d:
                            col = a * n + s
                            row[col] = row.get(col, ZERO) - sign * d
                    rows.append({c: v for c, v in row.items() if v})
        return kernel_of_rows(rows, nn)

    plus_pure = condition_kernel(1)
    minus_pure = condition_kernel(-1)
    _, plus = subspace_combine(plus_pure, v_space)
    _, minus = subspace_combine(minus_pure, v_space)
    return MatrixSubspace(n, plus), MatrixSubspace(n, minus)


@dataclass(frozen=True)
class DirectSumReport:
    """Whether V+ (+) V- = V, with all dimensions and the completeness flag."""

    v_dim: int
    vplus_dim: int
    vminus_dim: int
    intersection_dim: int
    sum_equals_v: bool
    is_direct_sum: bool
    complete: bool


def verify_direct_sum(alg: LieAlgebra) -> DirectSumReport:
    v = compute_V(alg)
    vplus, vminus = compute_Vpm(alg)
    total, inter = subspace_combine(vplus.space, vminus.space)
    sum_equals_v = total == v.matrices.space
    return DirectSumReport(
        v.dim,
        vplus.dim,
        vminus.dim,
        inter.dim,
        sum_equals_v,
        sum_equals_v and inter.dim == 0,
        is_complete(alg).complete,
    )


@dataclass(frozen=True)
class CorrespondenceReport:
    """Biderivation space versus V on a complete algebra.

    ``transposed_phis_in_v`` records that phi^T of every canonical basis
    biderivation lies in V, and ``dims_equal`` that the two spaces have the
    same dimension.  On semisimple algebras the decomposition collapses:
    V+ = 0 and dim V- equals the number of direct factors.
    """

    bider_dim: int
    v_dim: int
    dims_equal: bool
    transposed_phis_in_v: bool
    semisimple: bool
    factor_count: int
    vplus_dim: int
    vminus_dim: int
    semisimple_shape_ok: Optional[bool]
    ok: bool


def bider_V_correspondence(alg: LieAlgebra) -> CorrespondenceReport:
    """Check dim BiDer = dim V and phi^T in V on a complete algebra.

    Raises NotComplete (via extract_phi_psi) when the algebra is not
    complete.
    """
    from .biderivations import NotComplete

    report = is_complete(alg)
    if not report.complete:
        raise NotComplete(
            "the biderivation/V correspondence requires a complete algebra"
        )
    space = biderivation_space(alg)
    v = compute_V(alg)
    vplus, vminus = compute_Vpm(alg)
    in_v = True
    for element in space.basis_elements():
        pair = extract_phi_psi(alg, element)
        if not v.matrices.contains(pair.phi.transpose()):
            in_v = False
            break
    dims_equal = space.dim == v.dim
    kf = killing_form(alg)
    factors = alg.factors if alg.factors is not None else (alg.dim,)
    shape_ok: Optional[bool] = None
    if kf.semisimple:
        shape_ok = vplus.dim == 0 and vminus.dim == len(factors)
    ok = dims_equal and in_v and (shape_ok is not False)
    return CorrespondenceReport(
        space.dim,
        v.dim,
        dims_equal,
        in_v,
        kf.semisimple,
        len(factors),
        vplus.dim,
        vminus.dim,
        shape_ok,
        ok,
    )
