from typing import Iterable, Sequence, Tuple

from pydantic import model_validator

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ValidationError
from beliefz.revision.operators import RevisionOperator
from beliefz.state import BaseState


def compact(ranks: Iterable[int]) -> Tuple[int, ...]:
    """
    Renumbers ranks to ``0..k`` without gaps, keeping their order.
    """
    ranks = tuple(ranks)
    renumber = {rank: index for index, rank in enumerate(sorted(set(ranks)))}
    return tuple(renumber[rank] for rank in ranks)


class PlausibilityOrder(BaseState):
    """
    A total preorder on the atoms given as compacted ranks, rank 0 holding the most plausible
    atoms.
    """

    space: OutcomeSpace
    ranks: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_ranks(self) -> "PlausibilityOrder":
        if len(self.ranks) != self.space.atom_count:
            raise ValidationError(detail="An order needs exactly one rank per atom.")
        if set(self.ranks) != set(range(max(self.ranks) + 1)):
            raise ValidationError(detail=f"Ranks {self.ranks} are not compacted.")
        return self

    @classmethod
    def from_ranks(cls, space: OutcomeSpace, ranks: Iterable[int]) -> "PlausibilityOrder":
        ranks = tuple(ranks)
        if any(rank < 0 for rank in ranks):
            raise ValidationError(detail="Ranks cannot be negative.")
        return cls(space=space, ranks=compact(ranks))

    @classmethod
    def uniform(cls, space: OutcomeSpace) -> "PlausibilityOrder":
        return cls(space=space, ranks=(0,) * space.atom_count)

    @classmethod
    def from_blocks(cls, space: OutcomeSpace, blocks: Sequence[Event]) -> "PlausibilityOrder":
        """
        Builds an order from its rank blocks, which must partition the space.
        """
        ranks = [-1] * space.atom_count
        for rank, block in enumerate(blocks):
            space.check(block)
            for atom in block:
                if ranks[atom] >= 0:
                    raise ValidationError(detail=f"Atom {atom} appears in two blocks.")
                ranks[atom] = rank
        if -1 in ranks:
            raise ValidationError(detail="The blocks do not cover the space.")
        return cls.from_ranks(space, ranks)

    @property
    def depth(self) -> int:
        return max(self.ranks) + 1

    def rank_of(self, atom: int) -> int:
        return self.ranks[atom]

    def blocks(self) -> Tuple[Event, ...]:
        masks = [0] * self.depth
        for atom, rank in enumerate(self.ranks):
            masks[rank] |= 1 << atom
        return tuple(Event(self.space, mask) for mask in masks)

    def describe(self) -> str:
        return " < ".join(block.describe() for block in self.blocks())


def order_belief(order: PlausibilityOrder) -> Event:
    return order.blocks()[0]


def order_revise(order: PlausibilityOrder, event: Event) -> Event:
    """
    The most plausible atoms of ``event``; the empty event revises to itself.
    """
    order.space.check(event)
    if event.is_empty:
        return event
    lowest = min(order.ranks[atom] for atom in event)
    return event.same(sum(1 << atom for atom in event if order.ranks[atom] == lowest))


def radical_upgrade(order: PlausibilityOrder, event: Event) -> PlausibilityOrder:
    """
    Promotes every atom of ``event`` above every other atom, keeping the order inside each side.
    """
    order.space.check(event)
    if event.is_empty or event.is_full:
        return order
    offset = order.depth
    return PlausibilityOrder.from_ranks(
        order.space,
        (rank if atom in event else rank + offset for atom, rank in enumerate(order.ranks)),
    )


def operator_from_order(order: PlausibilityOrder) -> RevisionOperator:
    return RevisionOperator.materialize(
        order.space, order_belief(order), lambda event: order_revise(order, event)
    )


def operator_to_order(operator: RevisionOperator) -> PlausibilityOrder:
    """
    Recovers the order behind an operator. Its first rank block is the revision by the full event,
    each further block the revision by what the earlier blocks leave over.
    """
    blocks = []
    remaining = operator.space.full
    while not remaining.is_empty:
        block = operator.revise(remaining)
        if block.is_empty or not block.is_subset(remaining):
            raise ValidationError(detail=f"The operator has no rank block inside {remaining}.")
        blocks.append(block)
        remaining = remaining - block
    return PlausibilityOrder.from_blocks(operator.space, blocks)
