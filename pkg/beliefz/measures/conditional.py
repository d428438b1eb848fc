from fractions import Fraction

from pydantic import model_validator

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ValidationError
from beliefz.measures.lex import LexSystem
from beliefz.state import BaseState


class ConditionalProbability(BaseState):
    """
    A two place probability ``P(A|E)`` defined for every conditioning event, the empty one
    included, evaluated through the first level of a partitioning lexicographic system that meets
    the condition.
    """

    backing: LexSystem

    @model_validator(mode="after")
    def validate_backing(self) -> "ConditionalProbability":
        if not self.backing.is_partitioning:
            raise ValidationError(detail="The backing system does not cover the space.")
        return self

    @property
    def space(self) -> OutcomeSpace:
        return self.backing.space

    def evaluate(self, event: Event, given: Event) -> Fraction:
        self.space.check(event)
        index = self.backing.first_level(given)
        if index < 0:
            return Fraction(1)
        return self.backing.level_mass(index, event & given) / self.backing.level_mass(index, given)

    def support(self, given: Event) -> Event:
        """
        The smallest event of conditional probability one given ``given``.
        """
        index = self.backing.first_level(given)
        if index < 0:
            return given
        level = self.backing.levels[index]
        return given.same(sum(1 << atom for atom in given if level[atom]))


def cond_prob_eval(probability: ConditionalProbability, event: Event, given: Event) -> Fraction:
    return probability.evaluate(event, given)
