"""
Drivers that machine-check the correspondence between revision operators, plausibility orders,
conditional probabilities and hyperreal measures on small outcome spaces.

Every driver builds its subjects up front (deterministically, from a seed where sampling is
involved) and fans the checks out over an executor, so the merged report does not depend on the
schedule.
"""

from fractions import Fraction
from random import Random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import SizeError, UsageError
from beliefz.executors.base import BaseExecutor, Item, create_executor
from beliefz.hyperreal.number import EPSILON, Hyperreal, hsum
from beliefz.measures.conditional import ConditionalProbability
from beliefz.measures.conversions import (
    cond_to_operator,
    hyper_to_operator,
    lex_to_hyper,
    operator_to_conditional,
    order_to_lex,
)
from beliefz.measures.hyper import HyperMeasure
from beliefz.measures.lex import LexSystem
from beliefz.revision.enumeration import (
    OPERATOR_LIMIT,
    TABLE_LIMIT,
    enumerate_operators,
    enumerate_preorders,
    ordered_bell,
)
from beliefz.revision.operators import RevisionOperator, check_postulates
from beliefz.revision.orders import operator_from_order, operator_to_order
from beliefz.state import BaseState

SAMPLE_LIMIT = 8


class CheckOutcome(BaseState):
    passed: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


class VerificationReport(BaseState):
    """
    Merged result of one driver.

    Args:
        name: The driver.
        atoms: Size of the outcome spaces checked.
        checks: Number of checks run.
        failures: One line per failed or crashed check.
        counts: Operators found per belief set, for the enumeration drivers.
        problems: Enumeration results that disagree with the expected counts.
    """

    name: str
    atoms: int
    checks: int
    failures: Tuple[str, ...] = ()
    counts: Tuple[Tuple[str, int], ...] = ()
    problems: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures and not self.problems

    @property
    def passed(self) -> int:
        return self.checks - len(self.failures)

    def lines(self) -> List[str]:
        lines = [f"{self.name}\tatoms={self.atoms}\tchecks={self.checks}\tpassed={self.passed}"]
        lines.extend(f"{self.name}\tK={belief}\toperators={count}" for belief, count in self.counts)
        lines.extend(f"{self.name}\tFAILED\t{failure}" for failure in self.failures)
        lines.extend(f"{self.name}\tMISMATCH\t{problem}" for problem in self.problems)
        return lines


def _fan_out(
    name: str,
    atoms: int,
    check: Callable[[Any], CheckOutcome],
    items: Sequence[Item],
    executor: Optional[BaseExecutor],
    counts: Sequence[Tuple[str, int]] = (),
) -> VerificationReport:
    owned = executor is None
    executor = executor or create_executor(1)
    try:
        events = executor.map_checks(check, items)
    finally:
        if owned:
            executor.shutdown()

    failures = []
    for event in events:
        if event.passed:
            continue
        if event.exception is not None:
            failures.append(f"{event.check_id}: raised {event.exception!r}")
        else:
            failures.append(f"{event.check_id}: {event.return_value.detail}")
    report = VerificationReport(
        name=name, atoms=atoms, checks=len(events), failures=tuple(failures), counts=tuple(counts)
    )
    logger.bind(logger_name="beliefz.verification").info(
        f"{name} on {atoms} atoms: {report.passed}/{report.checks} checks passed"
    )
    return report


def _guard(atoms: int, limit: int) -> OutcomeSpace:
    if atoms > limit:
        raise SizeError("outcome space", atoms, limit)
    if atoms < 2:
        raise UsageError(detail=f"At least two atoms are needed, got {atoms}.")
    return OutcomeSpace.anonymous(atoms)


def belief_sets(space: OutcomeSpace) -> List[Event]:
    return [event for event in space.events() if not event.is_empty]


Found = List[Tuple[Event, RevisionOperator]]


def _operators(space: OutcomeSpace) -> Tuple[Found, List[Tuple[str, int]], List[str]]:
    """
    Enumerates the operators of every belief set, recording the counts and any belief set whose
    count is not the number of weak orders on the remaining atoms.
    """
    found: Found = []
    counts: List[Tuple[str, int]] = []
    problems: List[str] = []
    for belief in belief_sets(space):
        operators = enumerate_operators(space, belief)
        counts.append((str(belief), len(operators)))
        expected = ordered_bell(space.atom_count - belief.size)
        if len(operators) != expected:
            problems.append(f"K={belief}: {len(operators)} operators, expected {expected}")
        if space.atom_count <= TABLE_LIMIT:
            image = {operator_from_order(order).masks for order in enumerate_preorders(space, belief)}
            if image != {operator.masks for operator in operators}:
                problems.append(f"K={belief}: operators differ from the preorder image")
        found.extend((belief, operator) for operator in operators)
    return found, counts, problems


def _with_problems(report: VerificationReport, problems: Sequence[str]) -> VerificationReport:
    if not problems:
        return report
    return report.model_copy(update={"problems": tuple(problems)})


def check_measure_round_trip(operator: RevisionOperator) -> CheckOutcome:
    measure = lex_to_hyper(order_to_lex(operator_to_order(operator)))
    if not measure.is_regular:
        return CheckOutcome(passed=False, detail="the constructed measure is not regular")
    if hyper_to_operator(measure) != operator:
        return CheckOutcome(passed=False, detail="the constructed measure induces another operator")
    return CheckOutcome(passed=True)


def check_conditional_round_trip(operator: RevisionOperator) -> CheckOutcome:
    if cond_to_operator(operator_to_conditional(operator)) != operator:
        return CheckOutcome(passed=False, detail="the conditional probability induces another operator")
    return CheckOutcome(passed=True)


def check_lex_agreement(operator: RevisionOperator) -> CheckOutcome:
    system = order_to_lex(operator_to_order(operator))
    through_measure = hyper_to_operator(lex_to_hyper(system))
    through_conditional = cond_to_operator(ConditionalProbability(backing=system))
    if through_measure != operator or through_conditional != operator:
        return CheckOutcome(passed=False, detail="measure and conditional probability disagree")
    return CheckOutcome(passed=True)


def check_operator_postulates(operator: RevisionOperator) -> CheckOutcome:
    failed = [report.postulate.value for report in check_postulates(operator) if not report.passed]
    return CheckOutcome(passed=not failed, detail=f"violates {', '.join(failed)}" if failed else "")


def _items(found: Found) -> List[Item]:
    return [
        (f"K={belief}#{index}", operator)
        for index, (belief, operator) in enumerate(found)
    ]


def verify_prop1(atoms: int, executor: Optional[BaseExecutor] = None) -> VerificationReport:
    """
    Every operator satisfying the basic postulates comes from a regular hyperreal measure.
    """
    space = _guard(atoms, OPERATOR_LIMIT)
    found, counts, problems = _operators(space)
    report = _fan_out("prop1", atoms, check_measure_round_trip, _items(found), executor, counts)
    return _with_problems(report, problems)


def verify_prop2(atoms: int, executor: Optional[BaseExecutor] = None) -> VerificationReport:
    """
    Every operator satisfying the basic postulates comes from a conditional probability.
    """
    space = _guard(atoms, OPERATOR_LIMIT)
    found, counts, problems = _operators(space)
    report = _fan_out("prop2", atoms, check_conditional_round_trip, _items(found), executor, counts)
    return _with_problems(report, problems)


def verify_prop3(atoms: int, executor: Optional[BaseExecutor] = None) -> VerificationReport:
    """
    The measure collapsed from a lexicographic system and the conditional probability it backs
    induce the same operator.
    """
    space = _guard(atoms, OPERATOR_LIMIT)
    found, counts, problems = _operators(space)
    report = _fan_out("prop3", atoms, check_lex_agreement, _items(found), executor, counts)
    return _with_problems(report, problems)


def random_measure(space: OutcomeSpace, rng: Random, depth: int = 3) -> HyperMeasure:
    """
    A random regular measure: each atom gets a positive polynomial weight of random order of
    magnitude, and the weights are normalised exactly.
    """
    raw: List[Hyperreal] = []
    for _ in range(space.atom_count):
        order = rng.randint(0, depth)
        weight = Fraction(rng.randint(1, 9), rng.randint(1, 5)) * EPSILON**order
        if rng.random() < 0.5:
            weight = weight + Fraction(rng.randint(0, 5), rng.randint(1, 5)) * EPSILON ** (order + 1)
        raw.append(weight)
    total = hsum(raw)
    return HyperMeasure.from_weights(space, [weight / total for weight in raw])


def random_lex(space: OutcomeSpace, rng: Random) -> LexSystem:
    """
    A random partitioning lexicographic system with random positive weights on each support.
    """
    ranks = [rng.randint(0, space.atom_count - 1) for _ in range(space.atom_count)]
    levels = []
    for rank in sorted(set(ranks)):
        raw = [
            Fraction(rng.randint(1, 9)) if ranks[atom] == rank else Fraction(0)
            for atom in range(space.atom_count)
        ]
        total = sum(raw)
        levels.append(tuple(value / total for value in raw))
    return LexSystem(space=space, levels=tuple(levels))


def _sample_spaces(atoms: Sequence[int], samples: int, seed: int) -> List[Tuple[int, Random]]:
    for count in atoms:
        if count > SAMPLE_LIMIT:
            raise SizeError("outcome space", count, SAMPLE_LIMIT)
        if count < 2:
            raise UsageError(detail=f"At least two atoms are needed, got {count}.")
    rng = Random(seed)
    return [(atoms[index % len(atoms)], rng) for index in range(samples)]


def verify_lemma2(
    atoms: Sequence[int], samples: int, seed: int = 0, executor: Optional[BaseExecutor] = None
) -> VerificationReport:
    """
    Random regular measures induce operators satisfying the basic postulates.
    """
    spaces: Dict[int, OutcomeSpace] = {}
    items: List[Item] = []
    for index, (count, rng) in enumerate(_sample_spaces(atoms, samples, seed)):
        space = spaces.setdefault(count, OutcomeSpace.anonymous(count))
        items.append((f"measure#{index}/{count}", random_measure(space, rng)))
    return _fan_out(
        "lemma2",
        max(atoms),
        lambda measure: check_operator_postulates(hyper_to_operator(measure)),
        items,
        executor,
    )


def verify_lemma1(
    atoms: Sequence[int], samples: int, seed: int = 0, executor: Optional[BaseExecutor] = None
) -> VerificationReport:
    """
    Random conditional probabilities induce operators satisfying the basic postulates.
    """
    spaces: Dict[int, OutcomeSpace] = {}
    items: List[Item] = []
    for index, (count, rng) in enumerate(_sample_spaces(atoms, samples, seed)):
        space = spaces.setdefault(count, OutcomeSpace.anonymous(count))
        probability = ConditionalProbability(backing=random_lex(space, rng))
        items.append((f"system#{index}/{count}", probability))
    return _fan_out(
        "lemma1",
        max(atoms),
        lambda probability: check_operator_postulates(cond_to_operator(probability)),
        items,
        executor,
    )
