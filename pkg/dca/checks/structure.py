"""Submodularity and separable convexity."""

from __future__ import annotations

import itertools

from dca.checks.report import CheckReport, CheckTimer, ViolationWitness
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import add, join, meet, unit_vector
from dca.lattice.values import INF


def _comparable(x, y) -> bool:
    return all(a <= b for a, b in zip(x, y)) or all(a >= b for a, b in zip(x, y))


def check_fn_submodular(f: DiscreteFunction) -> CheckReport:
    """f(x) + f(y) >= f(x v y) + f(x ^ y).

    Pairs outside dom f hold trivially and comparable pairs hold with
    equality, so only incomparable pairs of dom f are enumerated.
    """
    timer = CheckTimer("submodular-fn")
    for x, y in itertools.combinations(f.domain_points(), 2):
        if _comparable(x, y):
            continue
        timer.tick()
        up, down = join(x, y), meet(x, y)
        if f(x) + f(y) < f(up) + f(down):
            witness = ViolationWitness("submodular-pair", (x, y, up, down),
                                       (f(x), f(y), f(up), f(down)))
            return timer.finish(witness)
    return timer.finish()


def axis_point(lo, axis: int, t: int):
    """lo with coordinate ``axis`` replaced by t."""
    return add(lo, unit_vector(len(lo), axis, t - lo[axis]))


def separable_prediction(f: DiscreteFunction, lo, x):
    """f(lo) + sum_i [f(lo with x_i) - f(lo)]."""
    base = f(lo)
    total = base
    for i in range(len(x)):
        total = total + (f(axis_point(lo, i, x[i])) - base)
    return total


def check_fn_separable(f: DiscreteFunction) -> CheckReport:
    timer = CheckTimer("separable-fn")
    dom = f.effective_domain()
    box = dom.bounding_box()
    if not dom.is_box():
        gap = next(p for p in box if p not in dom)
        timer.note("effective domain is not a box")
        return timer.finish(ViolationWitness("domain-not-box", (gap,), (INF,),
                                             info={"box": (box.lo, box.hi)}))

    lo = box.lo
    for x in box:
        timer.tick()
        expected = separable_prediction(f, lo, x)
        if f(x) != expected:
            witness = ViolationWitness("separable-identity", (x, lo), (f(x), expected))
            return timer.finish(witness)

    for axis in range(f.dim):
        for t in range(box.lo[axis] + 1, box.hi[axis]):
            timer.tick()
            left, mid, right = (axis_point(lo, axis, s) for s in (t - 1, t, t + 1))
            if f(left) + f(right) < 2 * f(mid):
                witness = ViolationWitness("univariate-convexity", (left, mid, right),
                                           (f(left), f(mid), f(right)),
                                           info={"axis": axis, "t": t})
                return timer.finish(witness)
    return timer.finish()
