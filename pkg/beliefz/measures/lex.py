from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from pydantic import model_validator

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ValidationError
from beliefz.state import BaseState
from beliefz.utils import to_rational


class LexSystem(BaseState):
    """
    A finite sequence of standard probability vectors over the atoms with pairwise disjoint
    supports. The system is in partitioning form when the supports also cover the space.

    Args:
        space: The outcome space.
        levels: The probability vectors, most important first.
    """

    space: OutcomeSpace
    levels: Tuple[Tuple[Fraction, ...], ...]

    @model_validator(mode="after")
    def validate_levels(self) -> "LexSystem":
        if not self.levels:
            raise ValidationError(detail="A lexicographic system needs at least one level.")
        seen = 0
        for index, level in enumerate(self.levels):
            if len(level) != self.space.atom_count:
                raise ValidationError(
                    detail=f"Level {index} has {len(level)} entries for {self.space.atom_count} atoms."
                )
            if any(value < 0 for value in level):
                raise ValidationError(detail=f"Level {index} has a negative entry.")
            if sum(level) != 1:
                raise ValidationError(detail=f"Level {index} does not sum to 1.")
            support = sum(1 << atom for atom, value in enumerate(level) if value)
            if support & seen:
                raise ValidationError(detail=f"The support of level {index} overlaps an earlier one.")
            seen |= support
        return self

    @classmethod
    def from_levels(cls, space: OutcomeSpace, levels: Iterable[Sequence[Any]]) -> "LexSystem":
        return cls(
            space=space,
            levels=tuple(tuple(to_rational(value) for value in level) for level in levels),
        )

    @classmethod
    def from_pairs(cls, space: OutcomeSpace, levels: Iterable[Iterable[Any]]) -> "LexSystem":
        """
        Builds a system from the fixture layout: each level is a list of ``(atom, rational)``
        pairs, unlisted atoms weighing zero.
        """
        built = []
        for level in levels:
            row = [Fraction(0)] * space.atom_count
            for atom, value in level:
                if not 0 <= int(atom) < space.atom_count:
                    raise ValidationError(detail=f"Atom {atom} is out of range.")
                row[int(atom)] = to_rational(value)
            built.append(tuple(row))
        return cls(space=space, levels=tuple(built))

    @property
    def depth(self) -> int:
        return len(self.levels)

    def supports(self) -> Tuple[Event, ...]:
        return tuple(
            self.space.event(atom for atom, value in enumerate(level) if value)
            for level in self.levels
        )

    @property
    def is_partitioning(self) -> bool:
        covered = 0
        for support in self.supports():
            covered |= support.mask
        return covered == self.space.full.mask

    def first_level(self, event: Event) -> int:
        """
        Index of the first level whose support meets the event, -1 when none does.
        """
        self.space.check(event)
        for index, support in enumerate(self.supports()):
            if support.mask & event.mask:
                return index
        return -1

    def level_mass(self, index: int, event: Event) -> Fraction:
        level = self.levels[index]
        return sum((level[atom] for atom in event), Fraction(0))
