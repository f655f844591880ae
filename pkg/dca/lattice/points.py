"""Lattice points, rational points, integer boxes and finite lattice sets.

Points are plain tuples: ``LatticePoint`` holds ints, ``RationalPoint`` holds
``Fraction`` values. Containers check that every point has their dimension.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

from dca.errors import DimensionError, DomainError
from dca.lattice.values import to_fraction

LatticePoint = Tuple[int, ...]
RationalPoint = Tuple[Fraction, ...]


def lattice_point(coords: Iterable) -> LatticePoint:
    point = []
    for c in coords:
        if isinstance(c, bool):
            raise TypeError("booleans are not lattice coordinates")
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"coordinate {c} is not an integer")
            c = c.numerator
        if not isinstance(c, int):
            raise TypeError(f"lattice coordinate must be int, got {type(c).__name__}")
        point.append(c)
    return tuple(point)


def rational_point(coords: Iterable) -> RationalPoint:
    return tuple(to_fraction(c) for c in coords)


def is_integral(x) -> bool:
    return all(Fraction(c).denominator == 1 for c in x)


def check_same_dim(*points) -> int:
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def add(x, y):
    check_same_dim(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    check_same_dim(x, y)
    return tuple(a - b for a, b in zip(x, y))


def inner(p, x):
    check_same_dim(p, x)
    return sum((a * b for a, b in zip(p, x)), Fraction(0))


def linf_distance(x: LatticePoint, y: LatticePoint) -> int:
    check_same_dim(x, y)
    return max((abs(a - b) for a, b in zip(x, y)), default=0)


def l1_distance(x: LatticePoint, y: LatticePoint) -> int:
    check_same_dim(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


def l2sq_distance(x: LatticePoint, y: LatticePoint) -> int:
    check_same_dim(x, y)
    return sum((a - b) ** 2 for a, b in zip(x, y))


def join(x: LatticePoint, y: LatticePoint) -> LatticePoint:
    check_same_dim(x, y)
    return tuple(max(a, b) for a, b in zip(x, y))


def meet(x: LatticePoint, y: LatticePoint) -> LatticePoint:
    check_same_dim(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


def unit_vector(dim: int, axis: int, scale: int = 1) -> LatticePoint:
    return tuple(scale if i == axis else 0 for i in range(dim))


@dataclass(frozen=True)
class IntegerBox:
    """The integer interval [lo, hi]_Z."""

    lo: LatticePoint
    hi: LatticePoint

    def __post_init__(self):
        object.__setattr__(self, "lo", lattice_point(self.lo))
        object.__setattr__(self, "hi", lattice_point(self.hi))
        check_same_dim(self.lo, self.hi)
        if not self.lo:
            raise DimensionError("boxes need dimension >= 1")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise DomainError(f"empty box: lo={self.lo} hi={self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def size(self) -> int:
        return math.prod(b - a + 1 for a, b in zip(self.lo, self.hi))

    def __iter__(self) -> Iterator[LatticePoint]:
        # lexicographic order
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __len__(self):
        return self.size

    def __contains__(self, x) -> bool:
        return len(x) == self.dim and all(a <= c <= b for a, c, b in zip(self.lo, x, self.hi))

    def cells(self) -> Iterator[LatticePoint]:
        """Anchors a of the unit cells [a, a+1] covering the box.

        Flat directions (lo_i == hi_i) still get one anchor so that
        lower-dimensional sets meet at least one cell.
        """
        ranges = [range(a, max(a, b - 1) + 1) for a, b in zip(self.lo, self.hi)]
        return itertools.product(*ranges)

    def intersect(self, other: IntegerBox) -> IntegerBox | None:
        check_same_dim(self.lo, other.lo)
        lo = tuple(max(a, b) for a, b in zip(self.lo, other.lo))
        hi = tuple(min(a, b) for a, b in zip(self.hi, other.hi))
        if any(a > b for a, b in zip(lo, hi)):
            return None
        return IntegerBox(lo, hi)

    def __add__(self, other: IntegerBox) -> IntegerBox:
        return IntegerBox(add(self.lo, other.lo), add(self.hi, other.hi))

    @classmethod
    def cube(cls, dim: int, lo: int, hi: int) -> IntegerBox:
        return cls((lo,) * dim, (hi,) * dim)


@dataclass(frozen=True)
class LatticeSet:
    dim: int
    points: frozenset

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("lattice sets need dimension >= 1")
        points = frozenset(lattice_point(p) for p in self.points)
        for p in points:
            if len(p) != self.dim:
                raise DimensionError(f"point {p} does not have dimension {self.dim}")
        object.__setattr__(self, "points", points)

    @classmethod
    def of(cls, points: Iterable, dim: int | None = None) -> LatticeSet:
        points = [lattice_point(p) for p in points]
        if dim is None:
            if not points:
                raise DimensionError("cannot infer the dimension of an empty set")
            dim = len(points[0])
        return cls(dim, frozenset(points))

    @classmethod
    def from_box(cls, box: IntegerBox) -> LatticeSet:
        return cls(box.dim, frozenset(box))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.points)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.points

    def __bool__(self):
        return bool(self.points)

    def sorted(self) -> list:
        return sorted(self.points)

    def bounding_box(self) -> IntegerBox:
        if not self.points:
            raise DomainError("empty set has no bounding box")
        lo = tuple(min(p[i] for p in self.points) for i in range(self.dim))
        hi = tuple(max(p[i] for p in self.points) for i in range(self.dim))
        return IntegerBox(lo, hi)

    def is_box(self) -> bool:
        return bool(self.points) and len(self.points) == self.bounding_box().size

    def within(self, box: IntegerBox) -> LatticeSet:
        return LatticeSet(self.dim, frozenset(p for p in self.points if p in box))
