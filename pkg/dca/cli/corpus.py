"""The built-in example corpus: six small pipelines with known outcomes."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from dca.checks import (
    check_fn_integrally_convex,
    check_fn_midpoint,
    check_set_integrally_convex,
    check_set_midpoint,
    replay_witness,
)
from dca.geometry.hull import hull_membership, local_convex_extension
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet
from dca.ops import add_functions, conjugate, convolve, minkowski_sum

logger = logging.getLogger("dca.corpus")

EXAMPLE_IDS = ("ex31", "ex41", "ex42", "ex43", "ex51", "ex52")


@dataclass
class ExampleOutcome:
    id: str
    title: str
    reports: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.mismatches

    def expect(self, condition: bool, description: str):
        if not condition:
            logger.warning(f"{self.id}: expected {description}")
            self.mismatches.append(description)

    def check(self, report, verdict: bool, subject=None, points=None):
        """Record a report and compare its verdict (and optionally witness points)."""
        self.reports.append(report)
        self.expect(report.verdict == verdict, f"{report.property} verdict {verdict}")
        if report.witness is not None:
            if points is not None:
                self.expect(tuple(report.witness.points[:len(points)]) == tuple(points),
                            f"{report.property} witness {points}")
            if subject is not None:
                self.expect(replay_witness(report.witness, subject), f"{report.property} witness replays")


def _set(*points) -> LatticeSet:
    return LatticeSet.of(points)


def example_31(**_) -> ExampleOutcome:
    out = ExampleOutcome("ex31", "sum of two integrally convex sets with a hole at (1,1)")
    total = minkowski_sum(_set((0, 0), (1, 1)), _set((1, 0), (0, 1)))
    out.expect(total == _set((1, 0), (0, 1), (2, 1), (1, 2)), "S1 + S2 = {(1,0),(0,1),(2,1),(1,2)}")
    out.check(check_set_integrally_convex(total), False, total, [(1, 1)])
    membership = hull_membership((1, 1), total)
    out.expect(bool(membership) and membership.combination.verify(allowed=total), "(1,1) lies in conv(S1 + S2)")
    return out


def example_41(**_) -> ExampleOutcome:
    out = ExampleOutcome("ex41", "sum of two L-natural sets is not L-natural")
    s1, s2 = _set((0, 0, 0), (1, 1, 0)), _set((0, 0, 0), (0, 1, 1))
    out.check(check_set_midpoint(s1, "lnat"), True)
    out.check(check_set_midpoint(s2, "lnat"), True)
    total = minkowski_sum(s1, s2)
    out.expect(total == _set((0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)), "S1 + S2 has the four listed points")
    report = check_set_midpoint(total, "lnat")
    out.check(report, False, total, [(0, 1, 1), (1, 1, 0), (1, 1, 1), (0, 1, 0)])
    if report.witness is not None:
        out.expect(set(report.witness.info["missing"]) == {(1, 1, 1), (0, 1, 0)}, "both midpoints missing")
    out.check(check_set_integrally_convex(total), True)
    return out


def example_42(**_) -> ExampleOutcome:
    out = ExampleOutcome("ex42", "midpoint convex set plus a box is not midpoint convex")
    s, b = _set((0, 0, 1), (1, 1, 0)), _set((0, 0, 0), (1, 0, 0))
    out.check(check_set_midpoint(s, "dmc"), True)
    total = minkowski_sum(s, b)
    out.expect(total == _set((0, 0, 1), (1, 1, 0), (1, 0, 1), (2, 1, 0)), "S + B has the four listed points")
    out.check(check_set_midpoint(total, "dmc"), False, total, [(0, 0, 1), (2, 1, 0), (1, 1, 1), (1, 0, 0)])
    out.check(check_set_integrally_convex(total), True)
    return out


def example_43(**_) -> ExampleOutcome:
    out = ExampleOutcome("ex43", "convolution with a separable convex function loses midpoint convexity")
    s, b = _set((0, 0, 1), (1, 1, 0)), _set((0, 0, 0), (1, 0, 0))
    f = DiscreteFunction.from_callable(IntegerBox.cube(3, 0, 1), lambda x: 0 if x in s else 1)
    g = convolve(f, DiscreteFunction.indicator(b))
    total = minkowski_sum(s, b)
    expected = DiscreteFunction.from_callable(IntegerBox((0, 0, 0), (2, 1, 1)), lambda x: 0 if x in total else 1)
    out.expect(g.box == expected.box and g.same_table(expected), "f conv phi is 0 on S + B and 1 elsewhere")
    pair = [(0, 0, 1), (2, 1, 0), (1, 1, 1), (1, 0, 0)]
    for mode in ("global", "local"):
        report = check_fn_midpoint(g, mode)
        out.check(report, False, g, pair)
        if report.witness is not None:
            out.expect(report.witness.values == (0, 0, 1, 1), f"{mode} witness values 0, 0 against 1, 1")
    out.check(check_fn_integrally_convex(g), True)
    return out


def example_51(expected_mean=Fraction(1), **_) -> ExampleOutcome:
    out = ExampleOutcome("ex51", "conjugate of an integrally convex indicator is not integrally convex")
    s = _set((1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0), (0, 0, 0, 1))
    out.check(check_set_midpoint(s, "dmc"), True)
    g = conjugate(DiscreteFunction.indicator(s), IntegerBox((0, 0, 0, 0), (2, 2, 2, 3)))
    out.expect(all(g(p) == max(p[0] + p[1], p[1] + p[2], p[0] + p[2], p[3]) for p in g.box),
               "g(p) = max{p1+p2, p2+p3, p1+p3, p4} on the whole box")
    p, q = (0, 0, 0, 0), (1, 1, 1, 2)
    mid = (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), 1)
    value, combo = local_convex_extension(g, mid)
    out.expect(value == Fraction(5, 4), "local convex extension 5/4 at (1/2,1/2,1/2,1)")
    out.expect(combo is not None and combo.verify(allowed=set(g.domain_points()))
               and sum((w * g(y) for y, w in combo.support), Fraction(0)) == value,
               "the extension's combination averages to (1/2,1/2,1/2,1) with value 5/4")
    out.expect((g(p) + g(q)) / 2 == expected_mean, f"(g(p) + g(q))/2 = {expected_mean}")
    out.expect(value > (g(p) + g(q)) / 2, "extension at the midpoint exceeds the endpoint mean")
    out.check(check_fn_integrally_convex(g), False, g, [p, q])
    return out


def example_52(**_) -> ExampleOutcome:
    out = ExampleOutcome("ex52", "sum of integrally convex indicators is not integrally convex")
    d1 = _set((0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1))
    d2 = _set((0, 0, 0), (0, 1, 0), (1, 1, 1), (1, 2, 1))
    out.check(check_set_integrally_convex(d1), True)
    out.check(check_set_integrally_convex(d2), True)
    total = add_functions(DiscreteFunction.indicator(d1), DiscreteFunction.indicator(d2))
    cap = _set((0, 0, 0), (1, 2, 1))
    out.expect(total.effective_domain() == cap and all(v == 0 for _, v in total.finite_items()),
               "delta_D1 + delta_D2 = delta of {(0,0,0),(1,2,1)}")
    out.check(check_set_integrally_convex(cap), False, cap, [(Fraction(1, 2), 1, Fraction(1, 2))])
    return out


EXAMPLES = {
    "ex31": example_31,
    "ex41": example_41,
    "ex42": example_42,
    "ex43": example_43,
    "ex51": example_51,
    "ex52": example_52,
}


def reproduce_examples(only=None, self_test: bool = False, workers: int = 1) -> list:
    """Run the corpus (or the ``only`` ids) and return outcomes in id order.

    ``self_test`` perturbs one expected value so that ex51 must report a
    mismatch.
    """
    ids = list(EXAMPLE_IDS) if not only else [i for i in EXAMPLE_IDS if i in set(only)]
    options = {"expected_mean": Fraction(2)} if self_test else {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = {i: pool.submit(EXAMPLES[i], **options) for i in ids}
        outcomes = [futures[i].result() for i in ids]
    for o in outcomes:
        logger.info(f"{o.id}: matches={o.matches}")
    return outcomes
