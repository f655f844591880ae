"""Independent re-verification of violation witnesses.

Nothing here calls a checker: each witness is re-proved from the raw table
(or point set) with lattice and geometry primitives only.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from dca.checks.report import ViolationWitness
from dca.geometry.hull import hull_membership, local_convex_extension
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import LatticeSet, add, join, linf_distance, meet, sub, unit_vector
from dca.lattice.steps import decompose_difference, midpoint, neighborhood_points, rounded_midpoints
from dca.lattice.transforms import subtract_linear
from dca.lattice.values import is_finite

logger = logging.getLogger("dca.checks")


def _as_function(subject) -> DiscreteFunction:
    if isinstance(subject, LatticeSet):
        return DiscreteFunction.indicator(subject)
    return subject


def _as_set(subject) -> LatticeSet:
    if isinstance(subject, LatticeSet):
        return subject
    return subject.effective_domain()


def _is_hole(hole, s: LatticeSet, combination) -> bool:
    """hole in conv(S) (by the stored combination) but not in conv(S cap N(hole))."""
    if combination is None or tuple(combination.target) != tuple(Fraction(c) for c in hole):
        return False
    if not combination.verify(allowed=s):
        return False
    local = [p for p in neighborhood_points(hole) if p in s]
    return not local or not hull_membership(hole, local)


def _replay_midpoint(f, w):
    x, y, up, down = w.points
    if (up, down) != rounded_midpoints(x, y):
        return False
    return f(x) + f(y) < f(up) + f(down)


def _replay_submodular(f, w):
    x, y, up, down = w.points
    if up != join(x, y) or down != meet(x, y):
        return False
    return f(x) + f(y) < f(up) + f(down)


def _replay_envelope(f, w):
    x, y, mid = w.points
    if linf_distance(x, y) != 2 or tuple(mid) != midpoint(x, y):
        return False
    value, _ = local_convex_extension(f, mid)
    return value > (f(x) + f(y)) / 2


def _replay_parallelogram(f, w):
    x, y, xd, yd = w.points
    steps = decompose_difference(x, y)
    d = steps.vector(f.dim, w.info["J"])
    if xd != add(x, d) or yd != sub(y, d):
        return False
    return f(x) + f(y) < f(xd) + f(yd)


def _replay_argmin(f, w):
    argmin = subtract_linear(f, w.info["probe"]).argmin()
    if tuple(argmin.sorted()) != tuple(w.info["argmin"]):
        return False
    return _is_hole(w.points[0], argmin, w.detail)


def _replay_domain_not_box(f, w):
    dom = f.effective_domain()
    (gap,) = w.points
    return gap in dom.bounding_box() and not is_finite(f(gap))


def _replay_separable_identity(f, w):
    x, lo = w.points
    base = f(lo)
    predicted = base
    for i in range(f.dim):
        predicted = predicted + (f(add(lo, unit_vector(f.dim, i, x[i] - lo[i]))) - base)
    return f(x) != predicted


def _replay_univariate(f, w):
    left, mid, right = w.points
    axis = w.info["axis"]
    step = unit_vector(f.dim, axis)
    if add(left, step) != mid or add(mid, step) != right:
        return False
    return f(left) + f(right) < 2 * f(mid)


_FUNCTION_REPLAYS = {
    "midpoint-pair": _replay_midpoint,
    "submodular-pair": _replay_submodular,
    "envelope-gap": _replay_envelope,
    "parallelogram-pair": _replay_parallelogram,
    "argmin-hole": _replay_argmin,
    "domain-not-box": _replay_domain_not_box,
    "separable-identity": _replay_separable_identity,
    "univariate-convexity": _replay_univariate,
}


def replay_witness(witness: ViolationWitness, subject) -> bool:
    """True when ``witness`` still exhibits its violation on ``subject``."""
    if witness.kind == "hole-point":
        ok = _is_hole(witness.points[0], _as_set(subject), witness.detail)
    else:
        ok = _FUNCTION_REPLAYS[witness.kind](_as_function(subject), witness)
    if not ok:
        logger.warning(f"witness {witness.kind} at {witness.points} did not replay")
    return ok
