"""
Tests for the built-in example corpus: every pipeline reproduces its known
outcome, witnesses replay, and the self-test perturbation is caught.
"""

from fractions import Fraction

import pytest

from dca.checks.report import CheckReport
from dca.cli.corpus import EXAMPLE_IDS, EXAMPLES, ExampleOutcome, reproduce_examples


class TestCorpus:
    """The six worked examples."""

    @pytest.mark.parametrize("example_id", EXAMPLE_IDS)
    def test_example_matches(self, example_id):
        """Each pipeline matches every expectation it records."""
        outcome = EXAMPLES[example_id]()
        assert outcome.id == example_id
        assert outcome.mismatches == []
        assert outcome.reports

    def test_all_in_id_order(self):
        """reproduce_examples returns outcomes in corpus order."""
        outcomes = reproduce_examples()
        assert [o.id for o in outcomes] == list(EXAMPLE_IDS)
        assert all(o.matches for o in outcomes)

    def test_workers_do_not_change_results(self):
        """Threaded runs give the same verdicts."""
        serial = reproduce_examples(["ex41", "ex52"], workers=1)
        threaded = reproduce_examples(["ex41", "ex52"], workers=2)
        assert [[r.verdict for r in o.reports] for o in serial] == [[r.verdict for r in o.reports] for o in threaded]

    def test_self_test_is_caught(self):
        """Perturbing the expected mean makes ex51 report a mismatch."""
        (outcome,) = reproduce_examples(["ex51"], self_test=True)
        assert not outcome.matches
        assert any("(g(p) + g(q))/2" in m for m in outcome.mismatches)

    def test_expected_mean_is_a_parameter(self):
        """Only the endpoint-mean expectation reacts to the mean ex51 is given."""
        baseline = EXAMPLES["ex51"]()
        assert baseline.matches
        perturbed = EXAMPLES["ex51"](expected_mean=Fraction(3, 2))
        assert perturbed.mismatches == ["(g(p) + g(q))/2 = 3/2"]
        assert [r.verdict for r in perturbed.reports] == [r.verdict for r in baseline.reports]

    def test_self_test_flips_a_passing_run(self):
        """The same ex51 run matches without the perturbation and fails with it."""
        (clean,) = reproduce_examples(["ex51"])
        (perturbed,) = reproduce_examples(["ex51"], self_test=True)
        assert clean.matches
        assert perturbed.mismatches == ["(g(p) + g(q))/2 = 2"]


class TestOutcome:
    """ExampleOutcome bookkeeping."""

    def test_verdict_mismatch_recorded(self):
        """A verdict differing from the expectation is listed."""
        outcome = ExampleOutcome("exA", "toy")
        outcome.check(CheckReport("p", True), False)
        assert outcome.mismatches == ["p verdict False"]
        assert not outcome.matches
