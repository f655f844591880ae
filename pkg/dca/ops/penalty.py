"""Distance penalties a*d(x, S) and penalty extensions min_y f(y) + a*d(x, y)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from dca.errors import DimensionError, DomainError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet, l1_distance, l2sq_distance
from dca.lattice.values import to_fraction

logger = logging.getLogger("dca.ops")

DISTANCES = {
    "l1": l1_distance,
    "l2sq": l2sq_distance,
}


@dataclass(frozen=True)
class PenaltyExtension:
    function: DiscreteFunction
    threshold: Fraction  # smallest a for which the extension agrees with f on dom f


def _distance(kind: str):
    try:
        return DISTANCES[kind]
    except KeyError:
        raise DomainError(f"Unsupported distance kind: {kind}; expected one of {sorted(DISTANCES)}") from None


def _coefficient(a) -> Fraction:
    a = to_fraction(a)
    if a <= 0:
        raise DomainError(f"penalty coefficient must be positive, got {a}")
    return a


def _check_inside(points, box: IntegerBox, what: str):
    for p in points:
        if len(p) != box.dim:
            raise DimensionError(f"{what} point {p} does not match {box}")
        if p not in box:
            raise DomainError(f"{what} point {p} lies outside {box}")


def penalty_distance(s: LatticeSet, kind: str, a, box: IntegerBox) -> DiscreteFunction:
    dist = _distance(kind)
    a = _coefficient(a)
    if not s:
        raise DomainError("distance penalty needs a nonempty set")
    _check_inside(s, box, "set")
    points = s.sorted()
    return DiscreteFunction.from_callable(box, lambda x: a * min(dist(x, y) for y in points))


def penalty_threshold(f: DiscreteFunction, kind: str) -> Fraction:
    """max over x in dom f of the least a with min_y f(y) + a*d(x, y) = f(x)."""
    dist = _distance(kind)
    items = f.finite_items()
    threshold = Fraction(0)
    for x, fx in items:
        for y, fy in items:
            if x != y:
                threshold = max(threshold, (fx - fy) / dist(x, y))
    return threshold


def extend_with_penalty(f: DiscreteFunction, kind: str, a, box: IntegerBox) -> PenaltyExtension:
    dist = _distance(kind)
    a = _coefficient(a)
    items = f.finite_items()
    _check_inside([x for x, _ in items], box, "domain")
    g = DiscreteFunction.from_callable(box, lambda x: min(v + a * dist(x, y) for y, v in items))
    threshold = penalty_threshold(f, kind)
    logger.debug(f"{kind} extension with a={a}: agrees with f on dom f from a >= {threshold}")
    return PenaltyExtension(g, threshold)
