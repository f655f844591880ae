from __future__ import annotations

import logging

from dca.lattice.function import DiscreteFunction
from dca.ops.projection import normalize_keep, project_fn

logger = logging.getLogger("dca.ops")


def minimize_via_projection(f: DiscreteFunction, keep) -> tuple:
    """Minimise the projection onto ``keep``, then recover the dropped coordinates.

    Returns (minimiser, value); the minimiser is the first lexicographic
    point of the box with the kept coordinates fixed.
    """
    keep = normalize_keep(keep, f.dim)
    g = project_fn(f, keep)
    kept_point, value = g.minimum()
    for x in f.box:
        if tuple(x[i] for i in keep) == kept_point and f(x) == value:
            logger.debug(f"projected minimum {value} at {kept_point} lifts to {x}")
            return x, value
    raise AssertionError(f"no lift of {kept_point} attains {value}")
