from typing import Callable, Iterator, List, Sequence, Tuple

from loguru import logger
from pydantic import model_validator

from beliefz.algebra.events import Event
from beliefz.algebra.literals import parse_event
from beliefz.algebra.space import OutcomeSpace
from beliefz.enums import Postulate, PostulateStatus
from beliefz.exceptions import SizeError, ValidationError
from beliefz.state import BaseState

MATERIALIZE_LIMIT = 12

Reviser = Callable[[Event], Event]


class RevisionOperator(BaseState):
    """
    A revision operator for a fixed belief set, materialised over every event of a small space.

    Args:
        space: The outcome space.
        belief: The belief set ``K`` the operator revises.
        table: The revised belief set for each event, indexed by the event's bit mask.
    """

    space: OutcomeSpace
    belief: Event
    table: Tuple[Event, ...]

    @model_validator(mode="after")
    def validate_table(self) -> "RevisionOperator":
        if len(self.table) != 1 << self.space.atom_count:
            raise ValidationError(detail="The table must hold one entry per event of the space.")
        if self.belief.is_empty:
            raise ValidationError(detail="The belief set of an operator cannot be empty.")
        self.space.check(self.belief)
        return self

    @classmethod
    def materialize(cls, space: OutcomeSpace, belief: Event, revise: Reviser) -> "RevisionOperator":
        if space.atom_count > MATERIALIZE_LIMIT:
            raise SizeError("outcome space", space.atom_count, MATERIALIZE_LIMIT)
        return cls(space=space, belief=belief, table=tuple(revise(event) for event in space.events()))

    @classmethod
    def from_masks(cls, space: OutcomeSpace, belief: int, masks: Sequence[int]) -> "RevisionOperator":
        return cls(
            space=space,
            belief=Event(space, belief),
            table=tuple(Event(space, mask) for mask in masks),
        )

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(entry.mask for entry in self.table)

    def revise(self, event: Event) -> Event:
        self.space.check(event)
        return self.table[event.mask]

    def with_entry(self, event: Event, result: Event) -> "RevisionOperator":
        """
        A copy of the operator with a single table entry replaced.
        """
        self.space.check(event)
        self.space.check(result)
        table = list(self.table)
        table[event.mask] = result
        return RevisionOperator(space=self.space, belief=self.belief, table=tuple(table))


class PostulateReport(BaseState):
    """
    The outcome of checking one postulate.

    Serialises to ``postulate<TAB>status<TAB>witnesses`` where the witnesses are ``;`` separated
    tuples of ``|`` separated event literals.
    """

    postulate: Postulate
    status: PostulateStatus
    witnesses: Tuple[Tuple[Event, ...], ...] = ()

    @model_validator(mode="after")
    def validate_witnesses(self) -> "PostulateReport":
        if self.status is PostulateStatus.VIOLATED and not self.witnesses:
            raise ValidationError(detail=f"A violation of {self.postulate.value} needs a witness.")
        return self

    @property
    def passed(self) -> bool:
        return self.status in (PostulateStatus.HOLDS, PostulateStatus.VACUOUS)

    def to_line(self) -> str:
        witnesses = ";".join("|".join(str(event) for event in witness) for witness in self.witnesses)
        return f"{self.postulate.value}\t{self.status.value}\t{witnesses}"

    @classmethod
    def from_line(cls, line: str, space: OutcomeSpace) -> "PostulateReport":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 3:
            raise ValidationError(detail=f"Expected three tab separated fields in {line!r}.")
        postulate, status, witnesses = parts
        try:
            return cls(
                postulate=Postulate(postulate),
                status=PostulateStatus(status),
                witnesses=tuple(
                    tuple(parse_event(space, literal) for literal in witness.split("|"))
                    for witness in witnesses.split(";")
                    if witness
                ),
            )
        except ValueError as exc:
            raise ValidationError(detail=str(exc)) from None


def _status(fired: bool, witnesses: List[Tuple[Event, ...]]) -> PostulateStatus:
    if witnesses:
        return PostulateStatus.VIOLATED
    return PostulateStatus.HOLDS if fired else PostulateStatus.VACUOUS


def violations(belief: int, table: Sequence[int]) -> Iterator[Tuple[Postulate, Tuple[int, ...]]]:
    """
    Walks the basic postulates over a mask table and yields every violation with the masks that
    witness it.
    """
    count = len(table)
    for mask in range(count):
        revised = table[mask]
        if revised & ~mask:
            yield Postulate.SUCCESS, (mask,)
        if belief & mask and revised != belief & mask:
            yield Postulate.CONDITIONALIZATION, (mask,)
        if mask and not revised:
            yield Postulate.CONSISTENCY, (mask,)
        if revised:
            for other in range(count):
                overlap = revised & other
                if overlap and overlap != table[mask & other]:
                    yield Postulate.ARROW, (mask, other)


def satisfies_postulates(belief: int, table: Sequence[int]) -> bool:
    return next(violations(belief, table), None) is None


def check_postulates(operator: RevisionOperator) -> List[PostulateReport]:
    """
    Checks the four basic postulates exhaustively and reports every violation.
    """
    space = operator.space
    found = {postulate: [] for postulate in Postulate.basic()}
    for postulate, masks in violations(operator.belief.mask, operator.masks):
        found[postulate].append(tuple(Event(space, mask) for mask in masks))

    fired = {
        Postulate.SUCCESS: True,
        Postulate.CONDITIONALIZATION: not operator.belief.is_empty,
        Postulate.CONSISTENCY: True,
        Postulate.ARROW: any(operator.masks),
    }
    reports = [
        PostulateReport(
            postulate=postulate,
            status=_status(fired[postulate], witnesses),
            witnesses=tuple(witnesses),
        )
        for postulate, witnesses in found.items()
    ]
    failed = [report.postulate.value for report in reports if not report.passed]
    if failed:
        logger.bind(logger_name="beliefz.revision").debug(f"Postulates violated: {', '.join(failed)}")
    return reports
