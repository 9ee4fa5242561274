"""Exact-arithmetic workbench for derivations and biderivations of
finite-dimensional Lie algebras presented by rational structure constants.

Everything is computed over the field of rational numbers with
`fractions.Fraction`; no floating point is used anywhere, so every reported
dimension, basis, and verdict is exact and deterministic.
"""

__version__ = "0.1.0"
