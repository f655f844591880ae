"""Discrete midpoint convexity of functions (L-natural, global, local) and the
parallelogram inequality that globally/locally midpoint convex functions obey."""

from __future__ import annotations

import itertools

from dca.checks.pairs import ordered_pairs
from dca.checks.report import CheckReport, CheckTimer, ViolationWitness
from dca.checks.sets import check_set_midpoint
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import add, sub
from dca.lattice.steps import decompose_difference, rounded_midpoints

MODES = ("all", "global", "local")

_ACCEPT = {
    "all": lambda d: d >= 1,
    "global": lambda d: d >= 2,
    "local": lambda d: d == 2,
}


def midpoint_violation(f: DiscreteFunction, x, y):
    """The midpoint-pair witness for (x, y), or None when the inequality holds."""
    up, down = rounded_midpoints(x, y)
    left = f(x) + f(y)
    right = f(up) + f(down)
    if left < right:
        return ViolationWitness("midpoint-pair", (x, y, up, down), (f(x), f(y), f(up), f(down)))
    return None


def check_fn_midpoint(f: DiscreteFunction, mode: str = "global") -> CheckReport:
    if mode not in MODES:
        raise ValueError(f"unknown midpoint mode {mode!r}; expected one of {MODES}")
    timer = CheckTimer(f"midpoint-fn[{mode}]")
    if mode == "local":
        domain_report = check_set_midpoint(f.effective_domain(), "dmc")
        timer.tick(domain_report.pairs_checked)
        if not domain_report:
            timer.note("effective domain is not a discrete midpoint convex set")
            w = domain_report.witness
            values = tuple(f(p) for p in w.points)
            return timer.finish(ViolationWitness("midpoint-pair", w.points, values,
                                                 info={"mode": mode, "domain": True}))
    for x, y in ordered_pairs(f.domain_points(), _ACCEPT[mode]):
        timer.tick()
        witness = midpoint_violation(f, x, y)
        if witness is not None:
            return timer.finish(ViolationWitness(witness.kind, witness.points, witness.values,
                                                 info={"mode": mode}))
    return timer.finish()


def check_fn_lnat(f: DiscreteFunction) -> CheckReport:
    """L-natural convexity: the midpoint inequality for every pair."""
    report = check_fn_midpoint(f, "all")
    return CheckReport("lnat-fn", report.verdict, report.witness, report.pairs_checked,
                       report.elapsed, report.notes)


def check_parallelogram(f: DiscreteFunction, mode: str = "global") -> CheckReport:
    """f(x) + f(y) >= f(x + d) + f(y - d) for every partial step sum d.

    The inequality is only promised for globally or locally midpoint convex
    f; the caller names which, and a failed precondition is reported with
    its midpoint witness instead of being assumed.
    """
    if mode not in ("global", "local"):
        raise ValueError(f"parallelogram precondition mode must be global or local, got {mode!r}")
    timer = CheckTimer("parallelogram")
    pre = check_fn_midpoint(f, mode)
    timer.tick(pre.pairs_checked)
    if not pre:
        timer.note(f"precondition failed: f is not {mode}ly discrete midpoint convex")
        w = pre.witness
        return timer.finish(ViolationWitness(w.kind, w.points, w.values,
                                             info={**w.info, "precondition": mode}))
    dim = f.dim
    for x, y in itertools.combinations(f.domain_points(), 2):
        steps = decompose_difference(x, y)
        for size in range(steps.m + 1):
            for subset in itertools.combinations(range(steps.m), size):
                timer.tick()
                d = steps.vector(dim, subset)
                xd, yd = add(x, d), sub(y, d)
                if f(x) + f(y) < f(xd) + f(yd):
                    witness = ViolationWitness(
                        "parallelogram-pair", (x, y, xd, yd), (f(x), f(y), f(xd), f(yd)),
                        info={"J": subset, "d": d})
                    return timer.finish(witness)
    return timer.finish()
