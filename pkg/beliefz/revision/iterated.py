from typing import List, Optional, Sequence, Tuple

from loguru import logger

from beliefz.algebra.events import Event
from beliefz.enums import I2Reading, Postulate, PostulateStatus
from beliefz.exceptions import ConditioningError, UsageError
from beliefz.revision.operators import PostulateReport
from beliefz.revision.policies import BasePolicy
from beliefz.state import BaseState

SEVERITY = (
    PostulateStatus.VIOLATED,
    PostulateStatus.INAPPLICABLE,
    PostulateStatus.HOLDS,
    PostulateStatus.VACUOUS,
)


class IteratedStep(BaseState):
    """
    The verdict for one adjacent pair of the evidence sequence.

    Args:
        index: Position of the first event of the pair.
        fired: Whether the antecedent of the postulate applies to the pair.
        status: Holds, violated, vacuous or inapplicable.
        witness: The pair itself.
    """

    index: int
    fired: bool
    status: PostulateStatus
    witness: Tuple[Event, Event]


class IteratedReport(BaseState):
    report: PostulateReport
    steps: Tuple[IteratedStep, ...]
    beliefs: Tuple[Optional[Event], ...]


def _antecedent(postulate: Postulate, first: Event, second: Event) -> bool:
    if postulate is Postulate.I1:
        return second.is_subset(first)
    return second.is_disjoint(first)


def check_iterated(
    policy: BasePolicy,
    evidence: Sequence[Event],
    postulate: Postulate,
    reading: I2Reading = I2Reading.GLOSS,
) -> IteratedReport:
    """
    Checks an iterated postulate on every adjacent pair ``(E, F)`` of the evidence, revising the
    state reached before ``E``:

    * I1, when ``F`` is a subset of ``E``: ``(K*E)*F == K*F``.
    * I2, when ``E`` and ``F`` are disjoint: ``(K*E)*F == K*F``, or ``(K*E)*F == K*E`` with the
      literal reading.
    * Iterated inclusion, when ``(K*E)`` meets ``F``: ``K*(E & F)`` is within ``(K*E)*F``.

    A pair whose belief sets are undefined, because conditioning hits probability zero, is
    reported inapplicable.
    """
    if postulate not in Postulate.iterated():
        raise UsageError(detail=f"{postulate.value} is not an iterated postulate.")
    log = logger.bind(logger_name="beliefz.revision.iterated")

    states = policy.run(evidence)
    beliefs: List[Optional[Event]] = []
    for state in states:
        try:
            beliefs.append(policy.belief(state))
        except ConditioningError:
            beliefs.append(None)

    steps: List[IteratedStep] = []
    witnesses: List[Tuple[Event, ...]] = []
    for index in range(len(evidence) - 1):
        first, second = evidence[index], evidence[index + 1]
        base = states[index]
        try:
            if postulate is Postulate.ITERATED_INCLUSION:
                after_first = policy.belief(states[index + 1])
                fired = not (after_first & second).is_empty
                if fired:
                    joint = policy.belief(policy.step(base, first & second))
                    held = joint.is_subset(policy.belief(states[index + 2]))
            else:
                fired = _antecedent(postulate, first, second)
                if fired:
                    after_both = policy.belief(states[index + 2])
                    if postulate is Postulate.I2 and reading is I2Reading.LITERAL:
                        held = after_both == policy.belief(states[index + 1])
                    else:
                        held = after_both == policy.belief(policy.step(base, second))
            if not fired:
                status = PostulateStatus.VACUOUS
            else:
                status = PostulateStatus.HOLDS if held else PostulateStatus.VIOLATED
        except ConditioningError as exc:
            log.warning(f"Pair {index} has no belief set: {exc}")
            fired, status = True, PostulateStatus.INAPPLICABLE

        log.debug(f"{postulate.value} pair {index}: {status.value}")
        steps.append(IteratedStep(index=index, fired=fired, status=status, witness=(first, second)))
        if status in (PostulateStatus.VIOLATED, PostulateStatus.INAPPLICABLE):
            witnesses.append((first, second))

    found = {step.status for step in steps}
    overall = next((status for status in SEVERITY if status in found), PostulateStatus.VACUOUS)
    report = PostulateReport(
        postulate=postulate,
        status=overall,
        witnesses=tuple(witnesses) if overall is not PostulateStatus.HOLDS else (),
    )
    return IteratedReport(report=report, steps=tuple(steps), beliefs=tuple(beliefs))
