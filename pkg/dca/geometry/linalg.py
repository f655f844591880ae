"""Exact linear algebra over the rationals on sympy matrices.

Callers pass and receive Fractions; sympy Rationals stay inside this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import sympy


def _rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _key(rows) -> tuple:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _matrix(rows) -> sympy.Matrix:
    return sympy.Matrix([[_rational(v) for v in row] for row in rows])


def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    reduced, pivots = _matrix(rows).rref()
    return [[_fraction(v) for v in reduced.row(i)] for i in range(len(pivots))], list(pivots)


def rank(rows) -> int:
    if not rows:
        return 0
    return _matrix(rows).rank()


@lru_cache(maxsize=65536)
def _kernel(rows: tuple, ncols: int) -> tuple:
    return tuple(tuple(_fraction(v) for v in w) for w in _matrix(rows).nullspace())


def null_space(rows, ncols: int) -> list:
    """Basis of {w : rows . w = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return [list(w) for w in _kernel(_key(rows), ncols)]


@lru_cache(maxsize=16384)
def _inverse(a: tuple):
    """Inverse of a square matrix as Fraction rows, or None when it is singular.

    Cell cuts keep asking about the same facet normals with new offsets, so
    inverses are cached per coefficient matrix.
    """
    m = _matrix(a)
    if m.det() == 0:
        return None
    inverse = m.inv(method="LU")
    return tuple(tuple(_fraction(v) for v in inverse.row(i)) for i in range(m.rows))


def solve_square(a, b):
    """Unique solution of a x = b, or None when a is singular."""
    inverse = _inverse(_key(a))
    if inverse is None:
        return None
    b = [Fraction(v) for v in b]
    return tuple(sum((c * v for c, v in zip(row, b)), Fraction(0)) for row in inverse)


def integer_scaled(vector) -> tuple:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    vector = [Fraction(v) for v in vector]
    den = lcm(*(v.denominator for v in vector))
    ints = [int(v * den) for v in vector]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no canonical scaling")
    return tuple(v // g for v in ints), Fraction(den, g)
