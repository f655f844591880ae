"""
Tests for the property checkers: verdicts on the worked examples, witness
shape and ordering, the submodular and separable checks, the quadratic matrix
criteria, the class chain and independent witness replay.
"""

import random
from fractions import Fraction

import pytest

from dca.checks import (
    CHECKS,
    check_argmin_characterization,
    check_fn_integrally_convex,
    check_fn_lnat,
    check_fn_midpoint,
    check_fn_separable,
    check_fn_submodular,
    check_parallelogram,
    check_set_integrally_convex,
    check_set_midpoint,
    classify_chain,
    classify_quadratic,
    get_check,
    random_probes,
    replay_witness,
)
from dca.checks import chain
from dca.checks.pairs import ordered_pairs
from dca.checks.report import CheckReport, ViolationWitness
from dca.errors import DimensionError, DomainError, InconsistentChainError, UnknownNameError
from dca.geometry import local_convex_extension
from dca.lattice import INF, DiscreteFunction, IntegerBox, LatticeSet
from dca.ops import quadratic_function

from conftest import half, lset


class TestReports:
    """Report and witness invariants."""

    def test_witness_exactly_when_false(self):
        """A true verdict cannot carry a witness and a false one must."""
        w = ViolationWitness("hole-point", ((0, 0),))
        with pytest.raises(ValueError):
            CheckReport("p", True, w)
        with pytest.raises(ValueError):
            CheckReport("p", False, None)

    def test_unknown_witness_kind(self):
        """Witness kinds are a closed vocabulary."""
        with pytest.raises(ValueError):
            ViolationWitness("mystery", ())

    def test_pair_order(self):
        """Pairs come sorted by distance, then lexicographically."""
        pairs = ordered_pairs([(2, 0), (0, 0), (1, 0)])
        assert pairs == [((0, 0), (1, 0)), ((1, 0), (2, 0)), ((0, 0), (2, 0))]


class TestSetChecks:
    """Integral convexity and midpoint closure of sets."""

    def test_diamond_has_hole(self, ex31_sum):
        """The first example sum misses (1,1) inside its hull."""
        report = check_set_integrally_convex(ex31_sum)
        assert not report
        assert report.witness.kind == "hole-point"
        assert report.witness.points == ((1, 1),)
        assert report.witness.detail.verify(ex31_sum.points)
        assert replay_witness(report.witness, ex31_sum)

    def test_singleton_and_box_are_integrally_convex(self):
        """Degenerate sets pass."""
        assert check_set_integrally_convex(lset((3, -1)))
        assert check_set_integrally_convex(lset(*IntegerBox((0, 0), (2, 1))))

    def test_empty_set_rejected(self):
        """Checks need a nonempty set."""
        with pytest.raises(DomainError):
            check_set_integrally_convex(LatticeSet(2, frozenset()))

    def test_lnat_sum_witness(self, ex41_sum):
        """The L-natural sum fails on (0,1,1),(1,1,0) with both midpoints missing."""
        report = check_set_midpoint(ex41_sum, "lnat")
        assert not report
        assert report.witness.points == ((0, 1, 1), (1, 1, 0), (1, 1, 1), (0, 1, 0))
        assert set(report.witness.info["missing"]) == {(1, 1, 1), (0, 1, 0)}
        assert replay_witness(report.witness, ex41_sum)

    def test_lnat_sum_is_still_integrally_convex(self, ex41_sum):
        """The same sum keeps integral convexity."""
        assert check_set_integrally_convex(ex41_sum)

    def test_dmc_sum_witness(self, ex42_sum):
        """The midpoint convex sum fails on the distance-2 pair (0,0,1),(2,1,0)."""
        report = check_set_midpoint(ex42_sum, "dmc")
        assert not report
        assert report.witness.points == ((0, 0, 1), (2, 1, 0), (1, 1, 1), (1, 0, 0))
        assert replay_witness(report.witness, ex42_sum)

    def test_dmc_ignores_distance_one(self):
        """Distance-1 pairs are constrained in lnat mode only."""
        s = lset((0, 1), (1, 0))
        assert check_set_midpoint(s, "dmc")
        assert not check_set_midpoint(s, "lnat")

    def test_two_point_cap_has_half_integral_hole(self):
        """{(0,0,0),(1,2,1)} misses its midpoint's neighbourhood."""
        cap = lset((0, 0, 0), (1, 2, 1))
        report = check_set_integrally_convex(cap)
        assert report.witness.points == ((half(1), 1, half(1)),)
        assert replay_witness(report.witness, cap)

    def test_unknown_mode(self, ex31_sum):
        """Set midpoint modes are lnat and dmc."""
        with pytest.raises(ValueError):
            check_set_midpoint(ex31_sum, "global")


class TestFunctionChecks:
    """Midpoint, integral convexity, submodularity and separability of functions."""

    def test_convolution_loses_midpoint_convexity(self, ex43_g):
        """Global and local modes report the same witness with values 0,0,1,1."""
        for mode in ("global", "local"):
            report = check_fn_midpoint(ex43_g, mode)
            assert not report
            assert report.witness.points == ((0, 0, 1), (2, 1, 0), (1, 1, 1), (1, 0, 0))
            assert report.witness.values == (0, 0, 1, 1)
            assert replay_witness(report.witness, ex43_g)

    def test_convolution_stays_integrally_convex(self, ex43_g):
        """The same convolution passes the integral convexity check."""
        assert check_fn_integrally_convex(ex43_g)

    def test_conjugate_not_integrally_convex(self, ex51_g):
        """max{p1+p2, p2+p3, p1+p3, p4} fails with a replayable witness."""
        report = check_fn_integrally_convex(ex51_g)
        assert not report
        assert replay_witness(report.witness, ex51_g)

    def test_conjugate_extension_gap(self, ex51_g):
        """At (1/2,1/2,1/2,1) the local extension is 5/4 while the endpoint mean is 1."""
        value, combo = local_convex_extension(ex51_g, (half(1), half(1), half(1), 1))
        assert value == Fraction(5, 4)
        quarter = Fraction(1, 4)
        assert combo.support == (((0, 0, 1, 1), quarter), ((0, 1, 0, 1), quarter),
                                 ((1, 0, 0, 1), quarter), ((1, 1, 1, 1), quarter))
        assert sum(w * ex51_g(y) for y, w in combo.support) == value
        assert (ex51_g((0, 0, 0, 0)) + ex51_g((1, 1, 1, 2))) / 2 == 1
        report = check_fn_integrally_convex(ex51_g)
        assert report.witness.points[:2] == ((0, 0, 0, 0), (1, 1, 1, 2))
        assert report.witness.values[2] == Fraction(5, 4)

    def test_norms_are_lnat(self, l1_norm, l2sq_norm):
        """Separable convex functions pass every midpoint mode."""
        for f in (l1_norm, l2sq_norm):
            assert check_fn_lnat(f)
            assert check_fn_midpoint(f, "global")
            assert check_fn_midpoint(f, "local")

    def test_local_mode_checks_domain_first(self):
        """A non-dmc domain fails local mode before any value is compared."""
        dom = lset((0, 0), (2, 1))
        f = DiscreteFunction.indicator(dom)
        report = check_fn_midpoint(f, "local")
        assert not report
        assert report.witness.info["domain"]
        assert report.notes

    def test_product_is_not_submodular(self):
        """x1*x2 fails on (0,1),(1,0); -x1*x2 passes."""
        box = IntegerBox((0, 0), (1, 1))
        f = DiscreteFunction.from_callable(box, lambda x: x[0] * x[1])
        report = check_fn_submodular(f)
        assert not report
        assert report.witness.points == ((0, 1), (1, 0), (1, 1), (0, 0))
        assert replay_witness(report.witness, f)
        g = DiscreteFunction.from_callable(box, lambda x: -x[0] * x[1])
        assert check_fn_submodular(g)

    def test_separable(self, l2sq_norm):
        """Sums of univariate convex pieces pass; a coupling term fails the identity."""
        assert check_fn_separable(l2sq_norm)
        coupled = quadratic_function([[2, -1], [-1, 2]], box=IntegerBox.cube(2, -1, 1))
        report = check_fn_separable(coupled)
        assert report.witness.kind == "separable-identity"
        assert replay_witness(report.witness, coupled)

    def test_separable_needs_convex_pieces(self):
        """A concave univariate piece fails the convexity test."""
        f = DiscreteFunction.from_callable(IntegerBox((0, 0), (2, 0)), lambda x: [0, 1, 0][x[0]])
        report = check_fn_separable(f)
        assert report.witness.kind == "univariate-convexity"
        assert report.witness.points == ((0, 0), (1, 0), (2, 0))
        assert replay_witness(report.witness, f)

    def test_separable_needs_box_domain(self):
        """A non-box effective domain is reported with its first gap."""
        f = DiscreteFunction.from_callable(IntegerBox((0, 0), (1, 1)), lambda x: None if x == (0, 1) else 0)
        report = check_fn_separable(f)
        assert report.witness.kind == "domain-not-box"
        assert report.witness.points == ((0, 1),)
        assert replay_witness(report.witness, f)


class TestParallelogram:
    """Parallelogram inequality under a midpoint convexity precondition."""

    def test_holds_for_lnat(self):
        """An L-natural quadratic satisfies every parallelogram instance."""
        f = quadratic_function([[2, -1], [-1, 2]], box=IntegerBox.cube(2, -1, 1))
        report = check_parallelogram(f, "global")
        assert report
        assert report.pairs_checked > 0

    def test_failed_precondition_is_reported(self, ex43_g):
        """Without midpoint convexity the midpoint witness is surfaced."""
        report = check_parallelogram(ex43_g, "global")
        assert not report
        assert report.witness.kind == "midpoint-pair"
        assert report.witness.info["precondition"] == "global"
        assert replay_witness(report.witness, ex43_g)

    def test_mode_must_be_a_precondition(self, l1_norm):
        """'all' is not an accepted precondition."""
        with pytest.raises(ValueError):
            check_parallelogram(l1_norm, "all")


class TestArgmin:
    """Refutation-only argmin characterisation."""

    def test_zero_probe_finds_hole(self, ex31_sum):
        """The indicator of a set with a hole fails at p = 0."""
        f = DiscreteFunction.indicator(ex31_sum)
        report = check_argmin_characterization(f, [(0, 0)])
        assert not report
        assert report.witness.kind == "argmin-hole"
        assert report.witness.points == ((1, 1),)
        assert replay_witness(report.witness, f)

    def test_pass_is_marked_refutation_only(self, l1_norm):
        """A pass carries a note that only the listed probes were tried."""
        report = check_argmin_characterization(l1_norm, [(0, 0), (half(1), -1)])
        assert report
        assert any("refutation-only" in n for n in report.notes)

    def test_pass_does_not_prove_integral_convexity(self, ex51_g):
        """The conjugate g passes at p = 0 with a singleton argmin, yet it is not integrally convex."""
        assert ex51_g.argmin() == lset((0, 0, 0, 0))
        report = check_argmin_characterization(ex51_g, [(0, 0, 0, 0)])
        assert report
        assert report.witness is None
        assert any("refutation-only" in n for n in report.notes)
        assert not check_fn_integrally_convex(ex51_g)

    def test_random_probes(self):
        """Probes start at zero, are seeded and have the requested length."""
        probes = random_probes(random.Random(7), 3, 5)
        assert len(probes) == 5
        assert probes[0] == (0, 0, 0)
        assert all(len(p) == 3 and all(isinstance(c, Fraction) for c in p) for p in probes)
        assert probes == random_probes(random.Random(7), 3, 5)


class TestChain:
    """The containment chain separable < L-natural < global < local < integral."""

    def test_separable_passes_everything(self, l1_norm):
        """A separable convex function is in every class."""
        results = classify_chain(l1_norm)
        assert [name for name, _ in results] == ["separable", "lnat", "global-dmc", "local-dmc", "integrally-convex"]
        assert all(report.verdict for _, report in results)

    def test_convolution_splits_the_chain(self, ex43_g):
        """Only integral convexity survives the example convolution."""
        verdicts = [r.verdict for _, r in classify_chain(ex43_g)]
        assert verdicts == [False, False, False, False, True]

    def test_inconsistent_checker_detected(self, monkeypatch, l1_norm):
        """A weaker class failing after a stronger one passed raises."""
        failing = CheckReport("integrally-convex-fn", False,
                              ViolationWitness("hole-point", ((0, 0),)))
        patched = chain.CHAIN[:-1] + (("integrally-convex", lambda f: failing),)
        monkeypatch.setattr(chain, "CHAIN", patched)
        with pytest.raises(InconsistentChainError):
            classify_chain(l1_norm)


class TestQuadratic:
    """Matrix criteria for x^T Q x."""

    def test_lnat_matrix(self):
        """Diagonally dominant with nonpositive off-diagonals."""
        verdict = classify_quadratic([[2, -1], [-1, 2]])
        assert verdict.integrally_convex_sufficient
        assert verdict.lnat_in_y
        assert not verdict.mnat_in_y

    def test_mnat_matrix(self):
        """Nonnegative entries with q_ij >= min(q_ik, q_jk)."""
        verdict = classify_quadratic([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
        assert verdict.mnat_in_y
        assert not verdict.lnat_in_y
        assert verdict.integrally_convex_sufficient

    def test_mnat_three_term_condition(self):
        """q_01 = 0 below min(q_02, q_12) = 1 breaks M-natural convexity."""
        verdict = classify_quadratic([[3, 0, 1], [0, 3, 1], [1, 1, 3]])
        assert not verdict.mnat_in_y

    def test_reported_criteria(self):
        """The classification reports exactly the sufficient IC condition and the two in-y criteria."""
        verdict = classify_quadratic([[2, -1], [-1, 2]])
        assert verdict.as_dict() == {
            "integrally-convex (sufficient condition)": True,
            "lnat-in-y": True,
            "mnat-in-y": False,
        }

    def test_y_block(self):
        """Only the Q_YY block decides the in-y criteria."""
        q = [[1, 5, 0], [5, 2, -1], [0, -1, 2]]
        verdict = classify_quadratic(q, y_block=(1, 2))
        assert not verdict.integrally_convex_sufficient
        assert verdict.lnat_in_y
        assert verdict.y_block == (1, 2)

    def test_rejects_bad_matrices(self):
        """Asymmetric or ragged input is an error."""
        with pytest.raises(ValueError):
            classify_quadratic([[1, 2], [0, 1]])
        with pytest.raises(DimensionError):
            classify_quadratic([[1, 0], [0]])

    def test_sufficient_condition_agrees_with_table(self):
        """A diagonally dominant form also passes the table checker."""
        f = quadratic_function([[2, 1], [1, 2]], box=IntegerBox.cube(2, -1, 1))
        assert classify_quadratic([[2, 1], [1, 2]]).integrally_convex_sufficient
        assert check_fn_integrally_convex(f)


class TestRegistry:
    """Named checks."""

    def test_every_check_registered(self):
        """The registry covers sets, functions and quadratic forms."""
        assert {c.subject for c in CHECKS.values()} == {"set", "function", "quadratic"}
        assert get_check("argmin-ic").subject == "function"

    def test_unknown_check(self):
        """Unknown names raise UnknownNameError."""
        with pytest.raises(UnknownNameError):
            get_check("convex-ish")

    def test_argmin_with_explicit_probes(self, ex31_sum):
        """Explicit probe vectors override the seeded ones."""
        f = DiscreteFunction.indicator(ex31_sum)
        (report,) = get_check("argmin-ic").run(f, {"probe_vectors": [(0, 0)]})
        assert not report

    def test_indicator_values_are_zero_or_inf(self, ex31_sum):
        """Indicators built for the checks use 0 and +inf only."""
        f = DiscreteFunction.indicator(ex31_sum)
        assert {v for v in f.values.values()} == {0, INF}
