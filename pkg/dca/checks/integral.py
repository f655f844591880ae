"""Integral convexity of functions via the distance-2 midpoint criterion, and
the (refutation-only) argmin characterisation test."""

from __future__ import annotations

import random
from fractions import Fraction

from dca.checks.pairs import ordered_pairs
from dca.checks.report import CheckReport, CheckTimer, ViolationWitness
from dca.checks.sets import check_set_integrally_convex
from dca.geometry.hull import local_convex_extension
from dca.lattice.function import DiscreteFunction
from dca.lattice.steps import midpoint
from dca.lattice.transforms import subtract_linear


def check_fn_integrally_convex(f: DiscreteFunction) -> CheckReport:
    timer = CheckTimer("integrally-convex-fn")
    domain_report = check_set_integrally_convex(f.effective_domain())
    timer.tick(domain_report.pairs_checked)
    if not domain_report:
        timer.note("effective domain is not an integrally convex set")
        return timer.finish(domain_report.witness)

    extension_cache = {}
    for x, y in ordered_pairs(f.domain_points(), lambda d: d == 2):
        timer.tick()
        mid = midpoint(x, y)
        if mid not in extension_cache:
            extension_cache[mid] = local_convex_extension(f, mid)
        value, combo = extension_cache[mid]
        bound = (f(x) + f(y)) / 2
        if value > bound:
            witness = ViolationWitness("envelope-gap", (x, y, mid), (f(x), f(y), value),
                                       detail=combo, info={"bound": bound})
            return timer.finish(witness)
    return timer.finish()


def random_probes(rng: random.Random, dim: int, count: int, spread: int = 3, denominator: int = 4) -> list:
    """The zero vector followed by ``count - 1`` random rational directions."""
    probes = [tuple(Fraction(0) for _ in range(dim))]
    while len(probes) < count:
        probes.append(tuple(Fraction(rng.randint(-spread * denominator, spread * denominator),
                                     rng.randint(1, denominator)) for _ in range(dim)))
    return probes[:count]


def check_argmin_characterization(f: DiscreteFunction, probes) -> CheckReport:
    """argmin f[-p] must be an integrally convex set for every probe p.

    A finite probe list can only refute integral convexity, never confirm it.
    """
    timer = CheckTimer("argmin-ic")
    timer.note("refutation-only: a pass covers the listed probes, not every p")
    for p in probes:
        p = tuple(Fraction(c) for c in p)
        argmin = subtract_linear(f, p).argmin()
        report = check_set_integrally_convex(argmin)
        timer.tick(report.pairs_checked)
        if not report:
            hole = report.witness.points[0]
            witness = ViolationWitness("argmin-hole", (hole,), detail=report.witness.detail,
                                       info={"probe": p, "argmin": tuple(argmin.sorted())})
            return timer.finish(witness)
    return timer.finish()
