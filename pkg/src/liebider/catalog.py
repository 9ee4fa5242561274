"""Built-in catalog of Lie algebras used throughout the test suite and CLI.

Every entry is constructed over Q with a documented basis.  Parameterized
names use a call syntax: ``abelian(4)`` and ``twostep(5,2)``; the latter is
seeded so random two-step nilpotent examples are reproducible.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Optional

from .liealg import ConstantKey, LieAlgebra, direct_sum, lie_algebra, validate
from .linalg import Matrix, solve_linear


class UnknownName(ValueError):
    """Raised for a catalog name that does not match any entry."""


def abelian(n: int) -> LieAlgebra:
    """Abelian algebra of dimension n (all brackets zero)."""
    if n < 0:
        raise UnknownName("abelian dimension must be nonnegative")
    return lie_algebra(n, {})


def heisenberg3() -> LieAlgebra:
    """Heisenberg algebra: basis (x, y, z) with [x, y] = z, z central."""
    return lie_algebra(3, {(0, 1, 2): 1}, ("x", "y", "z"))


def l22() -> LieAlgebra:
    """The two-dimensional non-abelian algebra: basis (e1, e2), [e1, e2] = e1."""
    return lie_algebra(2, {(0, 1, 0): 1}, ("e1", "e2"))


def sl2() -> LieAlgebra:
    """sl(2): basis (e, f, h) with [e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    return lie_algebra(
        3,
        {(0, 1, 2): 1, (0, 2, 0): -2, (1, 2, 1): 2},
        ("e", "f", "h"),
    )


def so3() -> LieAlgebra:
    """so(3): basis (e1, e2, e3) with the cyclic bracket [e1, e2] = e3,
    [e2, e3] = e1, [e3, e1] = e2."""
    return lie_algebra(
        3,
        {(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 1): -1},
        ("e1", "e2", "e3"),
    )


def _gl3_commutator_constants() -> dict[ConstantKey, Fraction]:
    """Structure constants of sl(3) from its defining 3x3 matrices.

    Basis order: x1=E12, x2=E23, x3=E13, y1=E21, y2=E32, y3=E31,
    h1=E11-E22, h2=E22-E33.
    """

    def unit(a: int, b: int) -> Matrix:
        return Matrix.from_rows(
            [[1 if (r, c) == (a, b) else 0 for c in range(3)] for r in range(3)]
        )

    basis = [
        unit(0, 1),
        unit(1, 2),
        unit(0, 2),
        unit(1, 0),
        unit(2, 1),
        unit(2, 0),
        unit(0, 0) - unit(1, 1),
        unit(1, 1) - unit(2, 2),
    ]
    # Columns of the coordinate system: basis matrices flattened.
    coord = Matrix.from_rows(
        [[m.flatten()[pos] for m in basis] for pos in range(9)]
    )
    constants: dict[ConstantKey, Fraction] = {}
    for i in range(8):
        for j in range(i + 1, 8):
            comm = basis[i] * basis[j] - basis[j] * basis[i]
            coords = solve_linear(coord, comm.flatten())
            if coords is None:
                raise RuntimeError("sl(3) commutator left the spanned space")
            for k, c in enumerate(coords):
                if c:
                    constants[(i, j, k)] = c
    return constants


def sl3() -> LieAlgebra:
    """sl(3): basis (x1, x2, x3, y1, y2, y3, h1, h2) of elementary and
    diagonal trace-zero matrices; brackets are genuine 3x3 commutators."""
    return lie_algebra(
        8,
        _gl3_commutator_constants(),
        ("x1", "x2", "x3", "y1", "y2", "y3", "h1", "h2"),
    )


def sl2_plus_sl2() -> LieAlgebra:
    """Direct sum of two copies of sl(2); factors (3, 3)."""
    return direct_sum(sl2(), sl2())


def twostep(n: int, m: int, seed: int = 0) -> LieAlgebra:
    """Seeded random two-step nilpotent algebra of dimension n.

    The last m basis vectors are central, brackets of the first n - m
    vectors land in that center with integer coefficients drawn uniformly
    from [-2, 2] by ``random.Random(seed)``, and at least one bracket is
    forced nonzero so the result is genuinely two-step (not abelian).
    Requires n - m >= 2 and m >= 1.
    """
    if m < 1 or n - m < 2:
        raise UnknownName(
            "twostep(n, m) needs m >= 1 central and n - m >= 2 generators"
        )
    rng = random.Random(seed)
    g = n - m
    constants: dict[ConstantKey, int] = {}
    for i in range(g):
        for j in range(i + 1, g):
            for k in range(g, n):
                c = rng.randint(-2, 2)
                if c:
                    constants[(i, j, k)] = c
    if not constants:
        constants[(0, 1, g)] = 1
    names = tuple(f"g{t + 1}" for t in range(g)) + tuple(
        f"z{t + 1}" for t in range(m)
    )
    return lie_algebra(n, constants, names)


_PLAIN = {
    "sl2": sl2,
    "sl3": sl3,
    "so3": so3,
    "sl2_plus_sl2": sl2_plus_sl2,
    "heisenberg3": heisenberg3,
    "L22": l22,
}

_PARAM_RE = re.compile(r"^(?P<head>[A-Za-z_][A-Za-z0-9_]*)\((?P<args>[^)]*)\)$")

CATALOG_NAMES = (
    "abelian(n)",
    "heisenberg3",
    "L22",
    "sl2",
    "sl3",
    "so3",
    "sl2_plus_sl2",
    "twostep(n,m)",
)


def catalog(name: str, seed: int = 0) -> LieAlgebra:
    """Look up a catalog algebra by name.

    Plain names: sl2, sl3, so3, sl2_plus_sl2, heisenberg3, L22.
    Parameterized: abelian(n), twostep(n,m) (the latter uses ``seed``).
    """
    name = name.strip()
    if name in _PLAIN:
        alg = _PLAIN[name]()
    else:
        match = _PARAM_RE.match(name)
        if not match:
            raise UnknownName(f"unknown catalog name: {name!r}")
        head = match.group("head")
        try:
            args = [int(a.strip()) for a in match.group("args").split(",") if a.strip()]
        except ValueError as exc:
            raise UnknownName(f"bad catalog arguments in {name!r}") from exc
        if head == "abelian" and len(args) == 1:
            alg = abelian(args[0])
        elif head == "twostep" and len(args) == 2:
            alg = twostep(args[0], args[1], seed)
        else:
            raise UnknownName(f"unknown catalog name: {name!r}")
    violation = validate(alg)
    if violation is not None:
        raise RuntimeError(f"catalog entry {name!r} violates Jacobi: {violation}")
    return alg
