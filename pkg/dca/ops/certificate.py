"""Constructive proof that S + B stays integrally convex for a segment B.

For x in conv(S + B) the construction returns weights over (S + B) cap N(x)
averaging to x. Boxes are handled as sums of axis segments.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from dca.errors import DimensionError, DomainError, NotInHullError, PreconditionError
from dca.geometry.hull import ConvexCombination, hull_membership
from dca.lattice.points import IntegerBox, LatticeSet, add, rational_point, unit_vector
from dca.lattice.steps import neighborhood_points
from dca.ops.sums import minkowski_sum

logger = logging.getLogger("dca.ops")


@dataclass(frozen=True)
class SegmentBox:
    """B = {t * e_axis : lo <= t <= hi}."""

    axis: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty segment [{self.lo}, {self.hi}] on axis {self.axis}")
        if self.axis < 0:
            raise DimensionError(f"negative axis {self.axis}")

    def points(self, dim: int) -> LatticeSet:
        if self.axis >= dim:
            raise DimensionError(f"axis {self.axis} outside dimension {dim}")
        return LatticeSet(dim, frozenset(unit_vector(dim, self.axis, t) for t in range(self.lo, self.hi + 1)))


def _split(s: LatticeSet, segment: SegmentBox, x) -> tuple:
    """x = y + z with y in conv(S) and z on the segment."""
    ends = {segment.lo, segment.hi}
    lifted = {}
    for p in s:
        for t in ends:
            lifted[add(p, unit_vector(s.dim, segment.axis, t))] = (p, t)
    membership = hull_membership(x, list(lifted))
    if not membership:
        shown = "(" + ", ".join(str(Fraction(v)) for v in x) + ")"
        message = f"{shown} is outside conv(S + B)"
        if membership.separator is not None:
            message += f"; separating halfspace {membership.separator.describe()}"
        raise NotInHullError(message, membership.separator)
    y = [Fraction(0)] * s.dim
    z_axis = Fraction(0)
    for point, w in membership.combination.support:
        p, t = lifted[point]
        for i in range(s.dim):
            y[i] += w * p[i]
        z_axis += w * t
    return tuple(y), z_axis


def _local_representation(s: LatticeSet, y) -> ConvexCombination:
    local = [p for p in neighborhood_points(y) if p in s]
    membership = hull_membership(y, local) if local else None
    if not membership:
        raise PreconditionError(f"{y} lies in conv(S) but not in conv(S cap N(y)); S is not integrally convex")
    return membership.combination


def segment_sum_certificate(s: LatticeSet, segment: SegmentBox, x,
                            inner: Optional[Callable] = None) -> ConvexCombination:
    """Weights over (S + B) cap N(x) that average to x.

    ``inner(y)`` replaces the default representation of y over S cap N(y);
    box certificates use it to chain segments.
    """
    x = rational_point(x)
    if len(x) != s.dim:
        raise DimensionError(f"point {x} does not have dimension {s.dim}")
    axis = segment.axis
    y, z_axis = _split(s, segment, x)
    zeta = math.floor(z_axis)
    beta = z_axis - zeta

    combo = inner(y) if inner is not None else _local_representation(s, y)
    # floor-valued points first
    support = sorted(combo.support, key=lambda item: (item[0][axis], item[0]))
    lams = [w for _, w in support]
    ys = [p for p, _ in support]
    cumulative = [Fraction(0)]
    for lam in lams:
        cumulative.append(cumulative[-1] + lam)

    if math.floor(x[axis]) - zeta <= y[axis]:
        case = 1
        k1 = 0 if beta == 0 else min(k for k in range(1, len(lams) + 1) if beta <= cumulative[k])
        alpha = beta - cumulative[k1 - 1] if k1 else Fraction(0)
        lifted_whole, split = max(k1 - 1, 0), (k1 - 1 if k1 else None)
    else:
        case = 2
        k1 = max(k for k in range(len(lams) + 1) if cumulative[k] <= beta)
        alpha = beta - cumulative[k1]
        lifted_whole, split = k1, k1

    up = unit_vector(s.dim, axis, zeta + 1)
    down = unit_vector(s.dim, axis, zeta)
    weighted = []
    for k, (p, lam) in enumerate(zip(ys, lams)):
        if k < lifted_whole:
            weighted.append((add(p, up), lam))
        elif k == split:
            weighted.append((add(p, up), alpha))
            weighted.append((add(p, down), lam - alpha))
        else:
            weighted.append((add(p, down), lam))
    result = ConvexCombination.build(x, weighted)
    logger.debug(f"segment certificate for {x}: case {case}, zeta={zeta}, beta={beta}, k1={k1}, alpha={alpha}")

    allowed = set(neighborhood_points(x))
    if not result.verify() or any(tuple(p) not in allowed for p in result.points()):
        raise PreconditionError(f"certificate for {x} leaves N(x); the summand is not integrally convex")
    return result


def box_sum_certificate(s: LatticeSet, box: IntegerBox, x) -> ConvexCombination:
    """Certificate for x in conv(S + box), chaining one segment per axis."""
    if box.dim != s.dim:
        raise DimensionError(f"box {box} does not match dimension {s.dim}")
    segments = [SegmentBox(i, box.lo[i], box.hi[i]) for i in range(box.dim)]
    partial_sums = [s]
    for seg in segments[:-1]:
        partial_sums.append(minkowski_sum(partial_sums[-1], seg.points(s.dim)))

    def certify(level: int, point):
        inner = None if level == 0 else (lambda y: certify(level - 1, y))
        return segment_sum_certificate(partial_sums[level], segments[level], point, inner)

    return certify(len(segments) - 1, x)
