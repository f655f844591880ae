"""Convex-hull membership with certificates, the local convex extension and
the global convex envelope, all as exact LPs over convex-combination weights."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from dca.errors import DimensionError, DomainError
from dca.geometry.linalg import integer_scaled
from dca.geometry.simplex import OPTIMAL, solve_lp
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import LatticeSet, inner, rational_point
from dca.lattice.steps import neighborhood_points
from dca.lattice.values import INF, ExtendedValue, is_finite

logger = logging.getLogger("dca.geometry")


@dataclass(frozen=True)
class ConvexCombination:
    target: tuple
    support: tuple  # ((point, weight), ...) with positive weights

    def points(self) -> list:
        return [p for p, _ in self.support]

    def weighted_sum(self) -> tuple:
        dim = len(self.target)
        return tuple(sum((w * p[i] for p, w in self.support), Fraction(0)) for i in range(dim))

    def verify(self, allowed=None) -> bool:
        """Weights positive and summing to 1, points averaging to the target,
        and (optionally) every support point inside ``allowed``."""
        if not self.support:
            return False
        if any(w <= 0 for _, w in self.support):
            return False
        if sum(w for _, w in self.support) != 1:
            return False
        if self.weighted_sum() != tuple(Fraction(c) for c in self.target):
            return False
        if allowed is not None and any(tuple(p) not in allowed for p in self.points()):
            return False
        return True

    def value(self, f: DiscreteFunction) -> ExtendedValue:
        return sum((w * f(p) for p, w in self.support), Fraction(0))

    @classmethod
    def build(cls, target, weighted) -> ConvexCombination:
        """Merge repeated points and drop zero weights."""
        merged = {}
        for p, w in weighted:
            merged[tuple(p)] = merged.get(tuple(p), Fraction(0)) + Fraction(w)
        support = tuple((p, w) for p, w in sorted(merged.items()) if w != 0)
        return cls(rational_point(target), support)


@dataclass(frozen=True)
class Halfspace:
    """<normal, z> <= offset, normal stored as coprime integers."""

    normal: tuple
    offset: Fraction

    @classmethod
    def canonical(cls, normal, offset) -> Halfspace:
        ints, factor = integer_scaled(normal)
        return cls(ints, Fraction(offset) * factor)

    def slack(self, z) -> Fraction:
        return self.offset - inner(self.normal, z)

    def contains(self, z) -> bool:
        return self.slack(z) >= 0

    def separates(self, x, points) -> bool:
        """x strictly outside, every point inside."""
        return self.slack(x) < 0 and all(self.contains(p) for p in points)

    def describe(self) -> str:
        normal = ", ".join(str(a) for a in self.normal)
        return f"<({normal}), z> <= {self.offset}"


@dataclass(frozen=True)
class HullMembership:
    combination: ConvexCombination | None = None
    separator: Halfspace | None = None

    @property
    def inside(self) -> bool:
        return self.combination is not None

    def __bool__(self):
        return self.inside


def _combination_lp(x, points, costs=None):
    """Rows: sum lambda = 1 and sum lambda_y y = x."""
    dim = len(x)
    a = [[Fraction(1)] * len(points)]
    for i in range(dim):
        a.append([Fraction(p[i]) for p in points])
    b = [Fraction(1)] + [Fraction(c) for c in x]
    return solve_lp(a, b, costs)


def hull_membership(x, v) -> HullMembership:
    """Decide x in conv(V); returns a combination or a strictly separating halfspace."""
    x = rational_point(x)
    points = v.sorted() if isinstance(v, LatticeSet) else sorted(set(tuple(p) for p in v))
    if not points:
        raise DomainError("hull membership needs a nonempty point set")
    if any(len(p) != len(x) for p in points):
        raise DimensionError(f"query {x} and points differ in dimension")
    result = _combination_lp(x, points)
    if result.status == OPTIMAL:
        combo = ConvexCombination.build(x, zip(points, result.x))
        return HullMembership(combination=combo)
    y0, *w = result.farkas
    separator = Halfspace.canonical(w, -y0)
    return HullMembership(separator=separator)


def _check_in_box(f: DiscreteFunction, x):
    if len(x) != f.dim:
        raise DimensionError(f"point {x} does not have dimension {f.dim}")
    if any(not lo <= c <= hi for lo, c, hi in zip(f.box.lo, x, f.box.hi)):
        raise DomainError(f"{x} lies outside {f.box}")


def local_convex_extension(f: DiscreteFunction, x, order=None) -> tuple:
    """f~(x) over N(x) cap dom f; returns (value, optimal combination or None).

    ``order`` optionally permutes the LP columns (used to test that the
    optimum does not depend on enumeration order).
    """
    x = rational_point(x)
    _check_in_box(f, x)
    points = [y for y in neighborhood_points(x) if is_finite(f(y))]
    if order is not None:
        points = order(points)
    return _min_combination(f, x, points)


def convex_envelope_value(f: DiscreteFunction, x) -> ExtendedValue:
    """Lower convex envelope of f at x using every point of dom f."""
    x = rational_point(x)
    if len(x) != f.dim:
        raise DimensionError(f"point {x} does not have dimension {f.dim}")
    value, _ = _min_combination(f, x, f.domain_points())
    return value


def _min_combination(f, x, points):
    if not points:
        return INF, None
    result = _combination_lp(x, points, [f(y) for y in points])
    if result.status != OPTIMAL:
        return INF, None
    combo = ConvexCombination.build(x, zip(points, result.x))
    return result.objective, combo
