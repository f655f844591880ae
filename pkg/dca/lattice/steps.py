"""Integral neighbourhoods, rounded midpoints and the step decomposition of y - x."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from dca.errors import DomainError
from dca.lattice.points import LatticePoint, LatticeSet, check_same_dim, linf_distance


def floor_point(x) -> LatticePoint:
    return tuple(math.floor(Fraction(c)) for c in x)


def ceil_point(x) -> LatticePoint:
    return tuple(math.ceil(Fraction(c)) for c in x)


def neighborhood_points(x) -> list:
    """N(x) = [floor x, ceil x]_Z in lexicographic order."""
    lo, hi = floor_point(x), ceil_point(x)
    return list(itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))))


def integral_neighborhood(x) -> LatticeSet:
    return LatticeSet(len(x), frozenset(neighborhood_points(x)))


def midpoint(x, y):
    check_same_dim(x, y)
    return tuple(Fraction(a + b, 2) for a, b in zip(x, y))


def rounded_midpoints(x: LatticePoint, y: LatticePoint) -> tuple:
    """(ceil((x+y)/2), floor((x+y)/2)); the two always sum to x + y."""
    mid = midpoint(x, y)
    return ceil_point(mid), floor_point(mid)


@dataclass(frozen=True)
class StepDecomposition:
    """y - x = sum_k (1_{A_k} - 1_{B_k}) with nested index sets (0-based indices)."""

    m: int
    steps: tuple

    def vector(self, dim: int, ks) -> LatticePoint:
        d = [0] * dim
        for k in ks:
            a, b = self.steps[k]
            for i in a:
                d[i] += 1
            for i in b:
                d[i] -= 1
        return tuple(d)

    def total(self, dim: int) -> LatticePoint:
        return self.vector(dim, range(self.m))


def decompose_difference(x: LatticePoint, y: LatticePoint) -> StepDecomposition:
    check_same_dim(x, y)
    if tuple(x) == tuple(y):
        raise DomainError("x = y has no step decomposition")
    diff = [b - a for a, b in zip(x, y)]
    m = linf_distance(x, y)
    steps = []
    for k in range(1, m + 1):
        a_k = frozenset(i for i, d in enumerate(diff) if d >= m + 1 - k)
        b_k = frozenset(i for i, d in enumerate(diff) if d <= -k)
        steps.append((a_k, b_k))
    return StepDecomposition(m, tuple(steps))
