from typing import Optional, Sequence, Tuple

from beliefz.algebra.events import Event
from beliefz.revision.orders import PlausibilityOrder, order_belief, order_revise
from beliefz.revision.policies import check_factors


def dependence_witness(
    orders: Sequence[PlausibilityOrder], factors: Sequence[Sequence[str]]
) -> Optional[Tuple[int, Event]]:
    """
    Finds the first order of the sequence at which the factors stop being independent, together
    with the event exposing it.

    An order keeps the factors independent when its belief set is the product of its projections
    and revising by a cylinder over any single factor keeps every value believed for the other
    factors. Learning about one factor may leave another undecided, but may not overturn it. The
    first failing stage is returned with the cylinder (the full event when the belief set itself
    does not factor), ``None`` when every stage passes.
    """
    for stage, order in enumerate(orders):
        space = order.space
        names = check_factors(space, factors)
        belief = order_belief(order)
        projections = [space.project(belief, factor) for factor in names]
        if space.rectangle(names, projections) != belief:
            return stage, space.full
        for index, factor in enumerate(names):
            for assignment in space.assignments(factor):
                cylinder = space.cylinder(assignment)
                revised = order_revise(order, cylinder)
                for other, other_factor in enumerate(names):
                    if other == index:
                        continue
                    if not projections[other] <= space.project(revised, other_factor):
                        return stage, cylinder
    return None


def independence_preserved(
    orders: Sequence[PlausibilityOrder], factors: Sequence[Sequence[str]]
) -> bool:
    return dependence_witness(orders, factors) is None
