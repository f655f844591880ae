"""Projections of sets and functions onto a subset of coordinates."""

from __future__ import annotations

import logging

from dca.errors import DimensionError, DomainError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet
from dca.lattice.values import INF

logger = logging.getLogger("dca.ops")


def normalize_keep(keep, dim: int) -> tuple:
    keep = tuple(sorted(set(keep)))
    if not keep:
        raise DomainError("projection needs at least one kept coordinate")
    if any(not 0 <= i < dim for i in keep):
        raise DimensionError(f"kept coordinates {keep} must lie in 0..{dim - 1}")
    return keep


def _take(x, keep):
    return tuple(x[i] for i in keep)


def project_set(s: LatticeSet, keep) -> LatticeSet:
    keep = normalize_keep(keep, s.dim)
    return LatticeSet(len(keep), frozenset(_take(x, keep) for x in s))


def project_fn(f: DiscreteFunction, keep) -> DiscreteFunction:
    """g(x) = min of f over the dropped coordinates of its box."""
    keep = normalize_keep(keep, f.dim)
    box = IntegerBox(_take(f.box.lo, keep), _take(f.box.hi, keep))
    values = {x: INF for x in box}
    for x, v in f.finite_items():
        key = _take(x, keep)
        if v < values[key]:
            values[key] = v
    logger.debug(f"projected {f.box} onto coordinates {keep}")
    return DiscreteFunction(box, values)


def dropped_sublattice(f: DiscreteFunction, keep) -> LatticeSet:
    """The box {(0, y)} wide enough that f conv delta_B reads back the projection at (x, 0)."""
    keep = normalize_keep(keep, f.dim)
    lo = tuple(0 if i in keep else -f.box.hi[i] for i in range(f.dim))
    hi = tuple(0 if i in keep else -f.box.lo[i] for i in range(f.dim))
    return LatticeSet.from_box(IntegerBox(lo, hi))


def restrict_to_kept(g: DiscreteFunction, keep) -> DiscreteFunction:
    """x -> g(x, 0): read a function back on the kept coordinates."""
    keep = normalize_keep(keep, g.dim)
    box = IntegerBox(_take(g.box.lo, keep), _take(g.box.hi, keep))

    def lift(x):
        full = [0] * g.dim
        for i, c in zip(keep, x):
            full[i] = c
        return tuple(full)

    return DiscreteFunction(box, {x: g(lift(x)) for x in box})
