from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, List, Tuple

from loguru import logger

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import SizeError, UsageError, ValidationError
from beliefz.revision.operators import RevisionOperator, satisfies_postulates
from beliefz.revision.orders import PlausibilityOrder, operator_from_order

PREORDER_LIMIT = 6
TABLE_LIMIT = 3
OPERATOR_LIMIT = 4


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """
    Number of weak orders on ``n`` elements.
    """
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell(n - k) for k in range(1, n + 1))


def submasks(mask: int) -> Iterator[int]:
    """
    Every nonempty submask of ``mask`` in descending numeric order.
    """
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def ordered_partitions(mask: int) -> Iterator[Tuple[int, ...]]:
    """
    Every sequence of nonempty disjoint blocks whose union is ``mask``.
    """
    if not mask:
        yield ()
        return
    for first in submasks(mask):
        for rest in ordered_partitions(mask & ~first):
            yield (first,) + rest


def _check_belief(space: OutcomeSpace, belief: Event) -> None:
    space.check(belief)
    if belief.is_empty:
        raise UsageError(detail="The belief set must not be empty.")


def enumerate_preorders(space: OutcomeSpace, belief: Event) -> List[PlausibilityOrder]:
    """
    All total preorders on the atoms whose most plausible block is exactly ``belief``, sorted by
    their rank tuples.
    """
    if space.atom_count > PREORDER_LIMIT:
        raise SizeError("outcome space", space.atom_count, PREORDER_LIMIT)
    _check_belief(space, belief)
    rest = belief.complement().mask
    orders = [
        PlausibilityOrder.from_blocks(
            space, [belief] + [Event(space, block) for block in blocks]
        )
        for blocks in ordered_partitions(rest)
    ]
    return sorted(orders, key=lambda order: order.ranks)


def _candidate_tables(space: OutcomeSpace) -> Iterator[Tuple[int, ...]]:
    """
    Every table sending the empty event to itself and each other event to a nonempty subset.
    """
    events = range(1, 1 << space.atom_count)
    choices = [list(submasks(mask)) for mask in events]
    for picks in product(*choices):
        yield (0,) + picks


def enumerate_operators(space: OutcomeSpace, belief: Event) -> List[RevisionOperator]:
    """
    All revision operators for ``belief`` satisfying the basic postulates, sorted by table.

    Up to three atoms every candidate table is filtered directly. Four atoms go through the
    preorders, each induced operator being re-checked against the postulates.
    """
    _check_belief(space, belief)
    count = space.atom_count
    log = logger.bind(logger_name="beliefz.revision.enumeration")

    if count <= TABLE_LIMIT:
        full = (1 << count) - 1
        accepted = [
            table
            for table in _candidate_tables(space)
            if table[full] == belief.mask and satisfies_postulates(belief.mask, table)
        ]
        operators = [RevisionOperator.from_masks(space, belief.mask, table) for table in accepted]
    elif count <= OPERATOR_LIMIT:
        operators = []
        for order in enumerate_preorders(space, belief):
            operator = operator_from_order(order)
            if not satisfies_postulates(belief.mask, operator.masks):
                raise ValidationError(detail=f"The order {order.ranks} induced an invalid operator.")
            operators.append(operator)
    else:
        raise SizeError("outcome space", count, OPERATOR_LIMIT)

    log.debug(f"{len(operators)} operators for {belief} over {count} atoms")
    return sorted(operators, key=lambda operator: operator.masks)


def candidate_count(space: OutcomeSpace) -> int:
    total = 1
    for mask in range(1, 1 << space.atom_count):
        total *= (1 << bin(mask).count("1")) - 1
    return total
