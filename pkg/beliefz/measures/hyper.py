from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import model_validator

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ConditioningError, DomainError, ValidationError
from beliefz.hyperreal.number import ZERO, Hyperreal, hsum, standard_ratio
from beliefz.state import BaseState
from beliefz.typing import RationalLike
from beliefz.utils import to_rational


class HyperMeasure(BaseState):
    """
    A finitely additive probability with hyperreal values over the powerset of an outcome space,
    stored by its atom weights.

    Args:
        space: The outcome space.
        weights: One non-negative weight per atom. The weights sum to exactly one.
    """

    space: OutcomeSpace
    weights: Tuple[Hyperreal, ...]

    @model_validator(mode="after")
    def validate_weights(self) -> "HyperMeasure":
        if len(self.weights) != self.space.atom_count:
            raise ValidationError(
                detail=f"Expected {self.space.atom_count} weights, got {len(self.weights)}."
            )
        for atom, weight in enumerate(self.weights):
            if weight.sign() < 0:
                raise ValidationError(detail=f"Weight of atom {atom} is negative: {weight}.")
        total = hsum(self.weights)
        if total != 1:
            raise ValidationError(detail=f"Weights sum to {total} instead of 1.")
        return self

    @classmethod
    def trusted(cls, space: OutcomeSpace, weights: Sequence[Hyperreal]) -> "HyperMeasure":
        """
        Builds a measure whose weights are known to be valid without re-checking them.
        """
        return cls.model_construct(space=space, weights=tuple(weights))

    @classmethod
    def from_weights(cls, space: OutcomeSpace, weights: Iterable[Any]) -> "HyperMeasure":
        return cls(space=space, weights=tuple(Hyperreal.coerce(weight) for weight in weights))

    @classmethod
    def uniform(cls, space: OutcomeSpace) -> "HyperMeasure":
        weight = Hyperreal.coerce(Fraction(1, space.atom_count))
        return cls.trusted(space, [weight] * space.atom_count)

    @property
    def is_regular(self) -> bool:
        return all(weight.sign() > 0 for weight in self.weights)

    def standard_weights(self) -> Tuple[Fraction, ...]:
        return tuple(weight.st() for weight in self.weights)

    def measure_of(self, event: Event) -> Hyperreal:
        self.space.check(event)
        return hsum(self.weights[atom] for atom in event)

    def condition(self, event: Event) -> "HyperMeasure":
        mass = self.measure_of(event)
        if not mass:
            raise ConditioningError(event)
        scale = mass.reciprocal()
        weights = [
            self.weights[atom] * scale if atom in event else ZERO
            for atom in range(self.space.atom_count)
        ]
        logger.bind(logger_name="beliefz.measures").debug(
            f"Conditioned on {event} of probability {mass}"
        )
        return HyperMeasure.trusted(self.space, weights)

    def valuations(self) -> List[Optional[int]]:
        """
        The order of magnitude of each weight, ``None`` for a zero weight.
        """
        return [weight.valuation() if weight else None for weight in self.weights]

    def belief_set(self) -> Event:
        """
        The atoms whose weight is not infinitesimal.
        """
        return self.space.event(
            atom for atom, weight in enumerate(self.weights) if weight and weight.valuation() == 0
        )

    def revise_by_measure(self, event: Event) -> Event:
        """
        The atoms of ``event`` whose conditional weight given ``event`` has a positive standard
        part. Weights are non-negative, so these are the atoms of ``event`` of least order of
        magnitude. Conditioning on a null event falls back to the belief set.
        """
        self.space.check(event)
        if event.is_empty:
            return event
        orders = {
            atom: self.weights[atom].valuation() for atom in event if self.weights[atom]
        }
        if not orders:
            return self.belief_set()
        lowest = min(orders.values())
        return event.same(sum(1 << atom for atom, order in orders.items() if order == lowest))

    def st_r(
        self, events: Iterable[Event], given: Optional[Event] = None, r: RationalLike = 1
    ) -> Tuple[Event, ...]:
        """
        The events of the collection whose (conditional) probability has standard part at least
        ``r``. Conditioning on a null event falls back to the unconditional probability.
        """
        threshold = to_rational(r)
        if not 0 <= threshold <= 1:
            raise DomainError(detail=f"The threshold {r} lies outside [0, 1].")
        condition = given if given is not None else self.space.full
        mass = self.measure_of(condition)
        if not mass:
            condition, mass = self.space.full, self.measure_of(self.space.full)
        return tuple(
            event
            for event in events
            if standard_ratio(self.measure_of(event & condition), mass) >= threshold
        )


def measure_of(measure: HyperMeasure, event: Event) -> Hyperreal:
    return measure.measure_of(event)


def condition(measure: HyperMeasure, event: Event) -> HyperMeasure:
    return measure.condition(event)


def belief_set(measure: HyperMeasure) -> Event:
    return measure.belief_set()


def revise_by_measure(measure: HyperMeasure, event: Event) -> Event:
    return measure.revise_by_measure(event)
