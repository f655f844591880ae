"""Integral convexity and midpoint closure of lattice sets."""

from __future__ import annotations

import itertools

from dca.checks.pairs import ordered_pairs
from dca.checks.report import CheckReport, CheckTimer, ViolationWitness
from dca.errors import DomainError
from dca.geometry.hull import hull_membership
from dca.geometry.polytope import cell_hull_equality, hull_halfspaces
from dca.lattice.points import LatticeSet
from dca.lattice.steps import rounded_midpoints
from dca.lattice.values import INF

MODES = ("lnat", "dmc")


def find_hole(s: LatticeSet):
    """First point (cells in lexicographic order) of conv(S) not covered cell-wise."""
    hrep = None
    cells = 0
    for anchor in s.bounding_box().cells():
        cells += 1
        if _cell_is_full(s, anchor):
            continue
        if hrep is None:
            hrep = hull_halfspaces(s.points)
        hole = cell_hull_equality(s, anchor, hrep)
        if hole is not None:
            return hole, cells
    return None, cells


def _cell_is_full(s: LatticeSet, anchor) -> bool:
    return all(c in s for c in itertools.product(*((a, a + 1) for a in anchor)))


def check_set_integrally_convex(s: LatticeSet, prop: str = "integrally-convex-set") -> CheckReport:
    if not s:
        raise DomainError("integral convexity check needs a nonempty set")
    timer = CheckTimer(prop)
    hole, cells = find_hole(s)
    timer.tick(cells)
    if hole is None:
        return timer.finish()
    membership = hull_membership(hole, s)
    witness = ViolationWitness("hole-point", (hole,), detail=membership.combination)
    return timer.finish(witness)


def check_set_midpoint(s: LatticeSet, mode: str = "lnat") -> CheckReport:
    if mode not in MODES:
        raise ValueError(f"unknown set midpoint mode {mode!r}; expected one of {MODES}")
    if not s:
        raise DomainError("midpoint check needs a nonempty set")
    timer = CheckTimer(f"{mode}-set")
    accept = (lambda d: d >= 1) if mode == "lnat" else (lambda d: d >= 2)
    for x, y in ordered_pairs(s.points, accept):
        timer.tick()
        up, down = rounded_midpoints(x, y)
        if up not in s or down not in s:
            values = tuple(0 if p in s else INF for p in (x, y, up, down))
            missing = tuple(p for p in (up, down) if p not in s)
            witness = ViolationWitness("midpoint-pair", (x, y, up, down), values,
                                       info={"mode": mode, "missing": missing})
            return timer.finish(witness)
    return timer.finish()
