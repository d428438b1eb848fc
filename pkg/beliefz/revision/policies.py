from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ConditioningError, UsageError
from beliefz.measures.hyper import HyperMeasure
from beliefz.revision.orders import (
    PlausibilityOrder,
    compact,
    order_belief,
    radical_upgrade,
)


class BasePolicy(ABC):
    """
    An iterated revision procedure. A policy owns an opaque revision state, starting from
    ``initial()``, and every piece of evidence moves it to a new state through ``step``.

    Args:
        space: The outcome space the evidence lives in.
    """

    alias: str = ""

    def __init__(self, space: OutcomeSpace) -> None:
        self.space = space

    @abstractmethod
    def initial(self) -> Any:
        """
        The state before any evidence.
        """
        ...

    @abstractmethod
    def step(self, state: Any, evidence: Event) -> Any:
        """
        Revises ``state`` by ``evidence``.
        """
        ...

    @abstractmethod
    def belief(self, state: Any) -> Event:
        """
        The belief set of ``state``. Raises ConditioningError when the state has none.
        """
        ...

    def run(self, evidence: Sequence[Event]) -> List[Any]:
        """
        Every state visited by the evidence sequence, the initial one included.
        """
        states = [self.initial()]
        for event in evidence:
            self.space.check(event)
            states.append(self.step(states[-1], event))
        return states


class ConditioningPolicy(BasePolicy):
    """
    Bayesian conditioning of a fixed hyperreal prior on the running intersection of the evidence.
    The state is that intersection.
    """

    alias = "conditioning"

    def __init__(self, measure: HyperMeasure) -> None:
        super().__init__(measure.space)
        self.measure = measure

    def initial(self) -> Event:
        return self.space.full

    def step(self, state: Event, evidence: Event) -> Event:
        return state & evidence

    def belief(self, state: Event) -> Event:
        if not self.measure.measure_of(state):
            raise ConditioningError(state)
        return self.measure.revise_by_measure(state)


class UpgradePolicy(BasePolicy):
    """
    Radical upgrade of a plausibility order.
    """

    alias = "upgrade"

    def __init__(self, order: PlausibilityOrder) -> None:
        super().__init__(order.space)
        self.order = order

    def initial(self) -> PlausibilityOrder:
        return self.order

    def step(self, state: PlausibilityOrder, evidence: Event) -> PlausibilityOrder:
        return radical_upgrade(state, evidence)

    def belief(self, state: PlausibilityOrder) -> Event:
        return order_belief(state)


class FactoredUpgradePolicy(BasePolicy):
    """
    Keeps one plausibility order per factor of the space and upgrades each factor by the
    projection of the evidence. The joint rank of an atom is the sum of its factor ranks, so
    beliefs about separate factors never become entangled. Evidence must be a product event.

    Args:
        space: The joint outcome space.
        factors: A partition of the space's variables.
        orders: Optional starting order per factor, uniform by default.
    """

    alias = "factored"

    def __init__(
        self,
        space: OutcomeSpace,
        factors: Sequence[Sequence[str]],
        orders: Optional[Sequence[PlausibilityOrder]] = None,
    ) -> None:
        super().__init__(space)
        self.factors = check_factors(space, factors)
        self.subspaces = tuple(
            OutcomeSpace(variables=tuple(space.variables[space.position(name)] for name in factor))
            for factor in self.factors
        )
        if orders is None:
            orders = [PlausibilityOrder.uniform(subspace) for subspace in self.subspaces]
        if len(orders) != len(self.subspaces):
            raise UsageError(detail="Expected one starting order per factor.")
        self.orders = tuple(orders)

    def initial(self) -> Tuple[PlausibilityOrder, ...]:
        return self.orders

    def project(self, event: Event) -> List[Event]:
        projections = [self.space.project(event, factor) for factor in self.factors]
        if self.space.rectangle(self.factors, projections) != event:
            raise UsageError(detail=f"The evidence {event} is not a product over the factors.")
        return [
            self.space.restrict(event, subspace) for subspace in self.subspaces
        ]

    def step(
        self, state: Tuple[PlausibilityOrder, ...], evidence: Event
    ) -> Tuple[PlausibilityOrder, ...]:
        return tuple(
            radical_upgrade(order, part) for order, part in zip(state, self.project(evidence))
        )

    def joint(self, state: Tuple[PlausibilityOrder, ...]) -> PlausibilityOrder:
        positions = [[self.space.position(name) for name in factor] for factor in self.factors]
        ranks = []
        for atom in range(self.space.atom_count):
            digits = self.space.digits(atom)
            total = 0
            for order, subspace, group in zip(state, self.subspaces, positions):
                local = sum(digits[p] * stride for p, stride in zip(group, subspace.strides))
                total += order.ranks[local]
            ranks.append(total)
        return PlausibilityOrder(space=self.space, ranks=compact(ranks))

    def belief(self, state: Tuple[PlausibilityOrder, ...]) -> Event:
        return order_belief(self.joint(state))


def check_factors(space: OutcomeSpace, factors: Sequence[Sequence[str]]) -> Tuple[Tuple[str, ...], ...]:
    """
    Validates that ``factors`` partitions the variables of ``space``.
    """
    names = [name for factor in factors for name in factor]
    if any(not factor for factor in factors) or sorted(names) != sorted(space.names):
        raise UsageError(
            detail=f"The factors {[list(factor) for factor in factors]} do not partition "
            f"the variables {list(space.names)}."
        )
    return tuple(tuple(factor) for factor in factors)


def create_policy(alias: str, **kwargs: Any) -> BasePolicy:
    """
    Instantiates the policy registered under ``alias``.
    """
    from beliefz._mapping import ObjectMapping
    from beliefz.utils import load_plugin

    policies: Dict[str, str] = ObjectMapping().policies
    try:
        ref = policies[alias]
    except KeyError:
        raise UsageError(
            detail=f"Unknown policy '{alias}' (expected one of {', '.join(policies)})."
        ) from None
    return load_plugin(ref, BasePolicy)(**kwargs)
