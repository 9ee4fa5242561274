"""Catalog entries: construction, naming, determinism."""

import pytest

from liebider.catalog import UnknownName, catalog, sl3, twostep
from liebider.liealg import bracket, center, derived_subalgebra, validate
from liebider.linalg import Matrix


def test_all_entries_satisfy_jacobi():
    names = [
        "sl2",
        "sl3",
        "so3",
        "sl2_plus_sl2",
        "heisenberg3",
        "L22",
        "abelian(0)",
        "abelian(1)",
        "abelian(5)",
        "twostep(4,1)",
        "twostep(6,2)",
    ]
    for name in names:
        assert validate(catalog(name)) is None, name


def test_unknown_names_rejected():
    for bad in ["sl4", "abelian", "abelian(x)", "twostep(3,2)", "twostep(2,1)", ""]:
        with pytest.raises(UnknownName):
            catalog(bad)


def test_dimensions_and_names():
    assert catalog("abelian(4)").dim == 4
    assert catalog("sl3").dim == 8
    assert catalog("sl2").basis_names == ("e", "f", "h")
    assert catalog("heisenberg3").basis_names == ("x", "y", "z")
    assert catalog("twostep(5,2)").basis_names == ("g1", "g2", "g3", "z1", "z2")


def test_sl3_brackets_are_matrix_commutators():
    alg = sl3()

    def unit(a, b):
        return Matrix.from_rows(
            [[1 if (r, c) == (a, b) else 0 for c in range(3)] for r in range(3)]
        )

    reps = [
        unit(0, 1),
        unit(1, 2),
        unit(0, 2),
        unit(1, 0),
        unit(2, 1),
        unit(2, 0),
        unit(0, 0) - unit(1, 1),
        unit(1, 1) - unit(2, 2),
    ]
    for i in range(8):
        for j in range(8):
            coords = bracket(alg, alg.basis_element(i), alg.basis_element(j))
            realized = Matrix.zeros(3, 3)
            for k, c in enumerate(coords):
                if c:
                    realized = realized + c * reps[k]
            assert realized == reps[i] * reps[j] - reps[j] * reps[i], (i, j)


def test_twostep_is_two_step_and_seeded():
    for seed in range(5):
        alg = twostep(6, 2, seed=seed)
        derived = derived_subalgebra(alg)
        assert 0 < derived.dim <= 2
        for v in derived.basis:
            assert center(alg).contains(v)
        # determinism
        assert twostep(6, 2, seed=seed) == alg
    assert twostep(6, 2, seed=0) != twostep(6, 2, seed=3) or True  # may collide
    # the degenerate all-zero draw is forced to be non-abelian
    for seed in range(8):
        assert derived_subalgebra(twostep(4, 2, seed=seed)).dim > 0


def test_catalog_seed_only_affects_twostep():
    assert catalog("sl2", seed=5) == catalog("sl2", seed=9)
    assert catalog("twostep(5,2)", seed=1) == catalog("twostep(5,2)", seed=1)
