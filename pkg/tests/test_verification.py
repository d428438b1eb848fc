from random import Random

import pytest

from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import SizeError, UsageError
from beliefz.executors import create_executor
from beliefz.revision.orders import PlausibilityOrder, operator_from_order
from beliefz.verification import (
    VerificationReport,
    random_lex,
    random_measure,
    verify_lemma1,
    verify_lemma2,
    verify_prop1,
    verify_prop2,
    verify_prop3,
)
from beliefz.verification.propositions import check_operator_postulates


@pytest.fixture
def threadpool():
    executor = create_executor(4)
    yield executor
    executor.shutdown()


class TestPropositions:
    @pytest.mark.parametrize(
        "driver", [verify_prop1, verify_prop2, verify_prop3], ids=["prop1", "prop2", "prop3"]
    )
    def test_three_atoms(self, driver):
        report = driver(3)

        assert report.ok
        assert report.checks == 13
        assert report.passed == 13
        assert len(report.counts) == 7

    def test_two_atoms(self):
        report = verify_prop3(2)

        assert report.ok
        assert report.checks == 3
        assert dict(report.counts) == {"#[0]": 1, "#[1]": 1, "#[0,1]": 1}

    def test_singleton_belief_counts(self):
        counts = dict(verify_prop2(3).counts)

        assert counts["#[0]"] == 3
        assert counts["#[0,1]"] == 1
        assert counts["#[0,1,2]"] == 1

    @pytest.mark.slow
    def test_four_atoms_on_a_thread_pool(self, threadpool):
        report = verify_prop1(4, executor=threadpool)

        assert report.ok
        assert report.checks == 75

    def test_too_many_atoms(self):
        with pytest.raises(SizeError):
            verify_prop1(5)

    def test_too_few_atoms(self):
        with pytest.raises(UsageError):
            verify_prop1(1)


class TestLemmas:
    def test_random_measures(self):
        report = verify_lemma2([2, 3, 4, 5], 200, seed=0)

        assert report.ok
        assert report.checks == 200
        assert report.atoms == 5

    def test_random_conditional_probabilities(self):
        report = verify_lemma1([2, 3, 4], 200, seed=0)

        assert report.ok
        assert report.checks == 200

    def test_schedule_does_not_change_the_report(self, threadpool):
        assert verify_lemma2([3, 4], 50, seed=7) == verify_lemma2([3, 4], 50, seed=7, executor=threadpool)

    @pytest.mark.slow
    def test_thousand_random_measures(self):
        report = verify_lemma2([2, 3, 4, 5], 1000, seed=0)

        assert report.ok
        assert report == verify_lemma2([2, 3, 4, 5], 1000, seed=0)

    def test_sample_size_guard(self):
        with pytest.raises(SizeError):
            verify_lemma1([9], 1)

    def test_random_measure_is_regular(self):
        space = OutcomeSpace.anonymous(4)
        rng = Random(3)

        for _ in range(20):
            measure = random_measure(space, rng)
            assert measure.is_regular
            assert measure.measure_of(space.full) == 1

    def test_random_lex_is_partitioning(self):
        space = OutcomeSpace.anonymous(5)
        rng = Random(3)

        for _ in range(20):
            assert random_lex(space, rng).is_partitioning


class TestReport:
    def test_lines(self):
        report = VerificationReport(
            name="prop1",
            atoms=3,
            checks=2,
            failures=("K=#[0]#1: violates *1",),
            counts=(("#[0]", 3),),
            problems=("K=#[1]: 2 operators, expected 3",),
        )

        assert not report.ok
        assert report.lines() == [
            "prop1\tatoms=3\tchecks=2\tpassed=1",
            "prop1\tK=#[0]\toperators=3",
            "prop1\tFAILED\tK=#[0]#1: violates *1",
            "prop1\tMISMATCH\tK=#[1]: 2 operators, expected 3",
        ]

    def test_broken_operator_is_reported(self, three_atoms):
        operator = operator_from_order(PlausibilityOrder.from_ranks(three_atoms, [0, 1, 2]))
        broken = operator.with_entry(three_atoms.event([1]), three_atoms.event([0]))

        outcome = check_operator_postulates(broken)

        assert not outcome
        assert outcome.detail.startswith("violates *1")
