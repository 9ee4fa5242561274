"""Derivation spaces, completeness, commuting maps, adjoint preimages."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liebider.catalog import catalog
from liebider.derivations import (
    CenterNonzero,
    NotInner,
    ad_preimage,
    commuting_map_space,
    derivation_space,
    inner_derivation_space,
    is_complete,
    skew_commuting_map_space,
)
from liebider.liealg import adjoint_matrix, bracket, center
from liebider.linalg import Matrix, SubspaceRelation, subspace_compare

import oracles

F = Fraction

# Frozen pre-build oracle values: (der, commuting, skew-commuting) dims.
FROZEN_DIMS = {
    "heisenberg3": (6, 4, 6),
    "sl2": (3, 1, 0),
    "L22": (2, 1, 3),
    "so3": (3, 1, 0),
    "abelian(2)": (4, 4, 4),
    "abelian(3)": (9, 9, 9),
    "sl2_plus_sl2": (6, 2, 0),
}


def test_dimensions_match_frozen_oracle():
    for name, (der, comm, skew) in FROZEN_DIMS.items():
        alg = catalog(name)
        assert derivation_space(alg).dim == der, name
        assert commuting_map_space(alg).dim == comm, name
        assert skew_commuting_map_space(alg).dim == skew, name


@pytest.mark.parametrize("name", ["heisenberg3", "sl2", "L22", "abelian(2)"])
def test_dimensions_match_live_sympy_oracle(name):
    alg = catalog(name)
    assert derivation_space(alg).dim == oracles.der_dim(alg)
    comm, skew = oracles.commuting_dims(alg)
    assert commuting_map_space(alg).dim == comm
    assert skew_commuting_map_space(alg).dim == skew


def test_derivation_basis_satisfies_leibniz():
    for name in FROZEN_DIMS:
        alg = catalog(name)
        n = alg.dim
        for flat in derivation_space(alg).basis:
            d = Matrix.from_flat(flat, n, n)
            for i in range(n):
                for j in range(n):
                    ei, ej = alg.basis_element(i), alg.basis_element(j)
                    lhs = d.apply(bracket(alg, ei, ej))
                    rhs = tuple(
                        a + b
                        for a, b in zip(
                            bracket(alg, d.apply(ei), ej),
                            bracket(alg, ei, d.apply(ej)),
                        )
                    )
                    assert lhs == rhs, (name, i, j)


def test_inner_derivations_inside_derivations():
    for name in FROZEN_DIMS:
        alg = catalog(name)
        der = derivation_space(alg)
        inner = inner_derivation_space(alg)
        assert subspace_compare(inner, der) in (
            SubspaceRelation.EQUAL,
            SubspaceRelation.LEFT_IN_RIGHT,
        )
        assert inner.dim == alg.dim - center(alg).dim  # rank-nullity of ad


def test_completeness_verdicts():
    for name, expected in [
        ("sl2", True),
        ("sl3", True),
        ("so3", True),
        ("sl2_plus_sl2", True),
        ("L22", True),
        ("heisenberg3", False),
        ("abelian(1)", False),
        ("abelian(4)", False),
    ]:
        report = is_complete(catalog(name))
        assert report.complete is expected, name
    report = is_complete(catalog("heisenberg3"))
    assert report.center_dim == 1
    assert report.derivation_dim == 6
    assert report.inner_dim == 2


def test_identity_always_commutes():
    # the identity map commutes on every algebra: [x, y] = [x, y]
    for name in FROZEN_DIMS:
        alg = catalog(name)
        assert commuting_map_space(alg).contains(
            Matrix.identity(alg.dim).flatten()
        )
        assert commuting_map_space(alg).dim >= 1 or alg.dim == 0


def test_commuting_maps_satisfy_definition():
    for name in FROZEN_DIMS:
        alg = catalog(name)
        n = alg.dim
        for flat in commuting_map_space(alg).basis:
            f = Matrix.from_flat(flat, n, n)
            for i in range(n):
                for j in range(n):
                    ei, ej = alg.basis_element(i), alg.basis_element(j)
                    assert bracket(alg, f.apply(ei), ej) == bracket(
                        alg, ei, f.apply(ej)
                    ), (name, i, j)
        for flat in skew_commuting_map_space(alg).basis:
            f = Matrix.from_flat(flat, n, n)
            for i in range(n):
                for j in range(n):
                    ei, ej = alg.basis_element(i), alg.basis_element(j)
                    assert bracket(alg, f.apply(ei), ej) == tuple(
                        -v for v in bracket(alg, ei, f.apply(ej))
                    ), (name, i, j)


@given(
    st.sampled_from(["sl2", "L22", "so3", "sl2_plus_sl2"]),
    st.lists(st.integers(-4, 4), min_size=1, max_size=8),
)
def test_ad_preimage_roundtrip(name, coords):
    alg = catalog(name)
    x = tuple(F(coords[i % len(coords)]) for i in range(alg.dim))
    assert ad_preimage(alg, adjoint_matrix(alg, x)) == x


def test_ad_preimage_errors():
    with pytest.raises(CenterNonzero):
        ad_preimage(catalog("heisenberg3"), Matrix.zeros(3, 3))
    # identity has nonzero trace, every ad matrix is traceless on sl2
    with pytest.raises(NotInner):
        ad_preimage(catalog("sl2"), Matrix.identity(3))
    with pytest.raises(ValueError):
        ad_preimage(catalog("sl2"), Matrix.zeros(2, 2))
