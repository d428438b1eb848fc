import pytest

from beliefz.algebra.space import OutcomeSpace
from beliefz.enums import Postulate, PostulateStatus
from beliefz.exceptions import SizeError, UsageError, ValidationError
from beliefz.revision import (
    PlausibilityOrder,
    PostulateReport,
    RevisionOperator,
    check_postulates,
    enumerate_operators,
    enumerate_preorders,
    operator_from_order,
    operator_to_order,
    order_belief,
    order_revise,
    ordered_bell,
    radical_upgrade,
    satisfies_postulates,
)
from beliefz.revision.enumeration import candidate_count, ordered_partitions
from beliefz.revision.orders import compact


@pytest.fixture
def chain(three_atoms):
    return PlausibilityOrder.from_ranks(three_atoms, [0, 1, 2])


@pytest.fixture
def operator(chain):
    return operator_from_order(chain)


def statuses(operator):
    return {report.postulate: report.status for report in check_postulates(operator)}


class TestPlausibilityOrder:
    def test_compact(self):
        assert compact([5, 2, 5, 9]) == (1, 0, 1, 2)

    def test_from_ranks_compacts(self, three_atoms):
        assert PlausibilityOrder.from_ranks(three_atoms, [4, 0, 4]).ranks == (1, 0, 1)

    def test_ranks_must_be_compact(self, three_atoms):
        with pytest.raises(ValidationError):
            PlausibilityOrder(space=three_atoms, ranks=(0, 2, 2))

    def test_blocks(self, three_atoms):
        order = PlausibilityOrder.from_ranks(three_atoms, [1, 0, 1])

        assert order.blocks() == (three_atoms.event([1]), three_atoms.event([0, 2]))
        assert order.depth == 2
        assert order_belief(order) == three_atoms.event([1])

    def test_from_blocks(self, three_atoms):
        order = PlausibilityOrder.from_blocks(three_atoms, [three_atoms.event([2]), three_atoms.event([0, 1])])

        assert order.ranks == (1, 1, 0)

    @pytest.mark.parametrize(
        "blocks",
        [[[0, 1], [1, 2]], [[0], [1]]],
        ids=["overlapping", "not covering"],
    )
    def test_invalid_blocks(self, three_atoms, blocks):
        with pytest.raises(ValidationError):
            PlausibilityOrder.from_blocks(three_atoms, [three_atoms.event(block) for block in blocks])

    def test_order_revise(self, chain, three_atoms):
        assert order_revise(chain, three_atoms.event([1, 2])) == three_atoms.event([1])
        assert order_revise(chain, three_atoms.empty) == three_atoms.empty

    def test_describe(self, naive_space):
        order = PlausibilityOrder.from_ranks(naive_space, [1, 1, 1, 0])

        assert order.describe() == (
            "{X1=heads,X2=heads} < {X1=tails,X2=tails; X1=tails,X2=heads; X1=heads,X2=tails}"
        )


class TestRadicalUpgrade:
    def test_promotes_the_event(self, uniform_order, naive_space):
        upgraded = radical_upgrade(uniform_order, naive_space.event([3]))

        assert upgraded.ranks == (1, 1, 1, 0)

    def test_keeps_the_order_on_each_side(self, naive_space):
        order = PlausibilityOrder.from_ranks(naive_space, [0, 1, 2, 3])
        upgraded = radical_upgrade(order, naive_space.event([1, 3]))

        assert upgraded.ranks == (2, 0, 3, 1)

    @pytest.mark.parametrize("atoms", [[], [0, 1, 2, 3]], ids=["empty", "full"])
    def test_trivial_events(self, uniform_order, naive_space, atoms):
        assert radical_upgrade(uniform_order, naive_space.event(atoms)) == uniform_order

    def test_first_sequence(self, uniform_order, naive_space):
        order = uniform_order
        for literal_atoms in ([3], [0], [2, 3]):
            order = radical_upgrade(order, naive_space.event(literal_atoms))

        assert order.ranks == (2, 3, 1, 0)
        assert order_belief(order) == naive_space.cylinder({"X1": "heads", "X2": "heads"})


class TestRevisionOperator:
    def test_grove_operator_satisfies_the_postulates(self, operator):
        assert all(report.passed for report in check_postulates(operator))
        assert statuses(operator)[Postulate.ARROW] is PostulateStatus.HOLDS

    def test_revise(self, operator, three_atoms):
        assert operator.belief == three_atoms.event([0])
        assert operator.revise(three_atoms.event([1, 2])) == three_atoms.event([1])
        assert operator.revise(three_atoms.empty) == three_atoms.empty

    def test_success_violation(self, operator, three_atoms):
        broken = operator.with_entry(three_atoms.event([1]), three_atoms.event([0]))
        reports = {report.postulate: report for report in check_postulates(broken)}

        assert reports[Postulate.SUCCESS].status is PostulateStatus.VIOLATED
        assert reports[Postulate.SUCCESS].witnesses == ((three_atoms.event([1]),),)

    def test_consistency_violation(self, operator, three_atoms):
        broken = operator.with_entry(three_atoms.event([1, 2]), three_atoms.empty)

        assert statuses(broken)[Postulate.CONSISTENCY] is PostulateStatus.VIOLATED

    def test_conditionalization_violation(self, operator, three_atoms):
        broken = operator.with_entry(three_atoms.event([0, 1]), three_atoms.event([0, 1]))

        assert statuses(broken)[Postulate.CONDITIONALIZATION] is PostulateStatus.VIOLATED

    def test_arrow_violation(self, four_atoms):
        chain = operator_from_order(PlausibilityOrder.from_ranks(four_atoms, [0, 1, 2, 3]))
        # 3 now beats 1 in a pair while 1 still beats 3 in the triple
        broken = chain.with_entry(four_atoms.event([1, 3]), four_atoms.event([3]))
        reports = {report.postulate: report for report in check_postulates(broken)}

        assert reports[Postulate.ARROW].status is PostulateStatus.VIOLATED
        assert all(len(witness) == 2 for witness in reports[Postulate.ARROW].witnesses)
        assert all(
            reports[postulate].passed
            for postulate in (Postulate.SUCCESS, Postulate.CONDITIONALIZATION, Postulate.CONSISTENCY)
        )

    def test_satisfies_postulates_on_masks(self, operator):
        assert satisfies_postulates(operator.belief.mask, operator.masks)
        assert not satisfies_postulates(operator.belief.mask, (0, 1, 1, 1, 4, 1, 2, 1))

    def test_table_size(self, three_atoms):
        with pytest.raises(ValidationError):
            RevisionOperator.from_masks(three_atoms, 1, [0, 1])

    def test_empty_belief(self, three_atoms):
        with pytest.raises(ValidationError):
            RevisionOperator.from_masks(three_atoms, 0, [0] * 8)

    def test_materialize_guard(self):
        space = OutcomeSpace.anonymous(13)

        with pytest.raises(SizeError):
            RevisionOperator.materialize(space, space.full, lambda event: event)

    def test_order_round_trip(self, four_atoms):
        for belief in four_atoms.events():
            if belief.is_empty:
                continue
            for order in enumerate_preorders(four_atoms, belief):
                assert operator_to_order(operator_from_order(order)) == order


class TestPostulateReport:
    def test_to_line(self, three_atoms):
        report = PostulateReport(
            postulate=Postulate.ARROW,
            status=PostulateStatus.VIOLATED,
            witnesses=((three_atoms.event([0, 1]), three_atoms.event([1, 2])),),
        )

        assert report.to_line() == "*4\tviolated\t#[0,1]|#[1,2]"
        assert PostulateReport.from_line(report.to_line(), three_atoms) == report

    def test_holds_line(self, three_atoms):
        line = "I1\tholds\t"

        report = PostulateReport.from_line(line, three_atoms)

        assert report.passed
        assert report.witnesses == ()
        assert report.to_line() == line

    def test_violation_needs_a_witness(self):
        with pytest.raises(ValidationError):
            PostulateReport(postulate=Postulate.SUCCESS, status=PostulateStatus.VIOLATED)

    @pytest.mark.parametrize(
        "line",
        ["*1\tholds", "*9\tholds\t", "*1\tbroken\t"],
        ids=["missing field", "unknown postulate", "unknown status"],
    )
    def test_malformed_lines(self, three_atoms, line):
        with pytest.raises(ValidationError):
            PostulateReport.from_line(line, three_atoms)


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,count", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 75), (5, 541), (6, 4683)]
    )
    def test_ordered_bell(self, n, count):
        assert ordered_bell(n) == count

    def test_ordered_partitions(self):
        assert len(list(ordered_partitions(0b111))) == 13
        assert list(ordered_partitions(0)) == [()]

    def test_candidate_count(self):
        assert candidate_count(OutcomeSpace.anonymous(2)) == 3
        assert candidate_count(OutcomeSpace.anonymous(3)) == 189

    @pytest.mark.parametrize("atoms", [2, 3, 4], ids=["two atoms", "three atoms", "four atoms"])
    def test_operators_match_preorders(self, atoms):
        space = OutcomeSpace.anonymous(atoms)
        for belief in space.events():
            if belief.is_empty:
                continue
            operators = enumerate_operators(space, belief)
            orders = enumerate_preorders(space, belief)

            assert len(operators) == len(orders) == ordered_bell(atoms - belief.size)
            assert sorted(operator.masks for operator in operators) == sorted(
                operator_from_order(order).masks for order in orders
            )

    def test_singleton_belief_on_three_atoms(self, three_atoms):
        assert len(enumerate_operators(three_atoms, three_atoms.event([0]))) == 3

    def test_preorders_start_with_the_belief(self, four_atoms):
        belief = four_atoms.event([1, 2])
        for order in enumerate_preorders(four_atoms, belief):
            assert order_belief(order) == belief

    def test_size_guards(self):
        with pytest.raises(SizeError):
            enumerate_preorders(OutcomeSpace.anonymous(7), OutcomeSpace.anonymous(7).full)
        with pytest.raises(SizeError):
            enumerate_operators(OutcomeSpace.anonymous(5), OutcomeSpace.anonymous(5).full)

    def test_empty_belief(self, three_atoms):
        with pytest.raises(UsageError):
            enumerate_operators(three_atoms, three_atoms.empty)
