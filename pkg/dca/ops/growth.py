"""Convolutions of truncated operands over growing boxes."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from dca.errors import DomainError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox
from dca.lattice.values import INF
from dca.ops.sums import convolve

logger = logging.getLogger("dca.ops")


@dataclass(frozen=True)
class GrowthReport:
    radii: tuple
    tables: tuple  # one {x: value} per radius, over the full convolution's box
    monotone: bool
    stable_from: int | None  # first radius from which the table equals the full convolution


def _truncate(f: DiscreteFunction, radius: int):
    box = f.box.intersect(IntegerBox.cube(f.dim, -radius, radius))
    if box is None:
        return None
    try:
        return f.restrict_box(box)
    except DomainError:
        return None


def convolution_growth(f: DiscreteFunction, phi: DiscreteFunction, radii) -> GrowthReport:
    """Tabulate (f restricted to [-r, r]^n) conv (phi restricted likewise) for each r.

    Values can only decrease as r grows and reach the untruncated
    convolution once both cubes cover the effective domains.
    """
    radii = tuple(sorted(radii))
    full = convolve(f, phi)
    reference = list(full.box)
    tables = []
    for r in radii:
        f_r, phi_r = _truncate(f, r), _truncate(phi, r)
        if f_r is None or phi_r is None:
            tables.append({x: INF for x in reference})
        else:
            g = convolve(f_r, phi_r)
            tables.append({x: g(x) for x in reference})

    monotone = all(later[x] <= earlier[x] for earlier, later in zip(tables, tables[1:]) for x in reference)
    target = {x: full(x) for x in reference}
    stable_from = None
    for r, table in reversed(list(zip(radii, tables))):
        if table != target:
            break
        stable_from = r
    logger.debug(f"growth over radii {radii}: monotone={monotone} stable_from={stable_from}")
    return GrowthReport(radii, tuple(tables), monotone, stable_from)
