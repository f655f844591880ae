"""Minkowski sums, integer infimal convolution and pointwise addition."""

from __future__ import annotations

import logging

from dca.errors import DimensionError, DomainError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import LatticeSet, add

logger = logging.getLogger("dca.ops")


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionError(f"operands have dimensions {a.dim} and {b.dim}")


def minkowski_sum(s1: LatticeSet, s2: LatticeSet) -> LatticeSet:
    _same_dim(s1, s2)
    return LatticeSet(s1.dim, frozenset(add(y, z) for y in s1 for z in s2))


def convolve(f1: DiscreteFunction, f2: DiscreteFunction) -> DiscreteFunction:
    """(f1 conv f2)(x) = min over x = y + z of f1(y) + f2(z), tabulated on the
    bounding box of dom f1 + dom f2."""
    _same_dim(f1, f2)
    best = {}
    for y, v in f1.finite_items():
        for z, w in f2.finite_items():
            x = add(y, z)
            total = v + w
            if x not in best or total < best[x]:
                best[x] = total
    box = LatticeSet(f1.dim, frozenset(best)).bounding_box()
    logger.debug(f"convolution of {len(f1.domain_points())} x {len(f2.domain_points())} "
                 f"domain points onto {box}")
    return DiscreteFunction.from_callable(box, lambda x: best.get(x))


def add_functions(f1: DiscreteFunction, f2: DiscreteFunction) -> DiscreteFunction:
    _same_dim(f1, f2)
    box = f1.box.intersect(f2.box)
    if box is None:
        raise DomainError(f"boxes {f1.box} and {f2.box} do not overlap")
    return DiscreteFunction.from_callable(box, lambda x: f1(x) + f2(x))