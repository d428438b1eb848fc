from itertools import product as cartesian
from math import prod
from typing import TYPE_CHECKING, Any, Dict, FrozenSet, Iterator, Mapping, Sequence, Tuple

from pydantic import PrivateAttr, model_validator

from beliefz.exceptions import ConfigError, UsageError
from beliefz.state import BaseState
from beliefz.typing import Assignment

if TYPE_CHECKING:
    from beliefz.algebra.events import Event

Projection = FrozenSet[Tuple[str, ...]]


class Variable(BaseState):
    """
    A named coordinate of an outcome space and its ordered value labels.
    """

    name: str
    values: Tuple[str, ...]

    @model_validator(mode="after")
    def validate_values(self) -> "Variable":
        if len(self.values) < 2:
            raise ConfigError(detail=f"Variable '{self.name}' needs at least two values.")
        if len(set(self.values)) != len(self.values):
            raise ConfigError(detail=f"Variable '{self.name}' has repeated values.")
        return self


class OutcomeSpace(BaseState):
    """
    Finite product space over named multi-valued variables.

    Atoms are numbered by the mixed-radix encoding of their value indices in declared variable
    order, the first variable being the most significant digit. With the scenario variables
    ``X1, X2, R11, ...`` and values ``(tails, heads)`` atom 0 is "everything tails".
    """

    variables: Tuple[Variable, ...]

    _strides: Tuple[int, ...] = PrivateAttr(default=())
    _positions: Dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def validate_variables(self) -> "OutcomeSpace":
        names = [variable.name for variable in self.variables]
        if not names:
            raise ConfigError(detail="An outcome space needs at least one variable.")
        if len(set(names)) != len(names):
            raise ConfigError(detail="Variable names must be unique.")
        return self

    def model_post_init(self, __context: Any) -> None:
        strides = []
        stride = 1
        for variable in reversed(self.variables):
            strides.append(stride)
            stride *= len(variable.values)
        self._strides = tuple(reversed(strides))
        self._positions = {variable.name: index for index, variable in enumerate(self.variables)}

    @classmethod
    def from_mapping(cls, variables: Mapping[str, Sequence[str]]) -> "OutcomeSpace":
        return cls(
            variables=tuple(
                Variable(name=name, values=tuple(values)) for name, values in variables.items()
            )
        )

    @classmethod
    def anonymous(cls, size: int, prefix: str = "w") -> "OutcomeSpace":
        """
        Single variable space whose atoms are labelled ``w0 .. w{size-1}``.
        """
        return cls.from_mapping({prefix: [f"{prefix}{index}" for index in range(size)]})

    @property
    def atom_count(self) -> int:
        return prod(len(variable.values) for variable in self.variables)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(variable.name for variable in self.variables)

    @property
    def strides(self) -> Tuple[int, ...]:
        return self._strides

    def position(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise ConfigError(detail=f"Unknown variable '{name}'.") from None

    def values_of(self, name: str) -> Tuple[str, ...]:
        return self.variables[self.position(name)].values

    def value_index(self, name: str, value: str) -> int:
        values = self.values_of(name)
        try:
            return values.index(value)
        except ValueError:
            raise ConfigError(
                detail=f"Unknown value '{value}' for variable '{name}' "
                f"(expected one of {', '.join(values)})."
            ) from None

    def digits(self, atom: int) -> Tuple[int, ...]:
        return tuple(
            (atom // stride) % len(variable.values)
            for stride, variable in zip(self._strides, self.variables)
        )

    def decode(self, atom: int) -> Assignment:
        return {
            variable.name: variable.values[digit]
            for variable, digit in zip(self.variables, self.digits(atom))
        }

    def encode(self, assignment: Mapping[str, str]) -> int:
        if set(assignment) != set(self.names):
            raise ConfigError(detail="A full assignment must give a value to every variable.")
        return sum(
            self.value_index(name, value) * self._strides[self.position(name)]
            for name, value in assignment.items()
        )

    def label(self, atom: int) -> str:
        return ",".join(f"{name}={value}" for name, value in self.decode(atom).items())

    @property
    def full(self) -> "Event":
        from beliefz.algebra.events import Event

        return Event(self, (1 << self.atom_count) - 1)

    @property
    def empty(self) -> "Event":
        from beliefz.algebra.events import Event

        return Event(self, 0)

    def event(self, atoms: Any) -> "Event":
        from beliefz.algebra.events import Event

        return Event.from_atoms(self, atoms)

    def events(self) -> Iterator["Event"]:
        """
        Every event of the powerset algebra in ascending bit-mask order.
        """
        from beliefz.algebra.events import Event

        for mask in range(1 << self.atom_count):
            yield Event(self, mask)

    def cylinder(self, assignments: Mapping[str, str]) -> "Event":
        """
        The event of all atoms agreeing with every assignment. The empty map gives the full event.
        """
        from beliefz.algebra.events import Event

        fixed = [
            (self.position(name), self.value_index(name, value))
            for name, value in assignments.items()
        ]
        mask = 0
        for atom in range(self.atom_count):
            digits = self.digits(atom)
            if all(digits[position] == value for position, value in fixed):
                mask |= 1 << atom
        return Event(self, mask)

    def project(self, event: "Event", names: Sequence[str]) -> Projection:
        """
        The set of value tuples the event takes on the given variables.
        """
        self.check(event)
        positions = [self.position(name) for name in names]
        return frozenset(
            tuple(self.variables[p].values[self.digits(atom)[p]] for p in positions)
            for atom in event
        )

    def rectangle(self, factors: Sequence[Sequence[str]], projections: Sequence[Projection]) -> "Event":
        """
        The product event whose projection on each factor is the given set of value tuples.
        """
        from beliefz.algebra.events import Event

        positions = [[self.position(name) for name in factor] for factor in factors]
        mask = 0
        for atom in range(self.atom_count):
            digits = self.digits(atom)
            if all(
                tuple(self.variables[p].values[digits[p]] for p in group) in allowed
                for group, allowed in zip(positions, projections)
            ):
                mask |= 1 << atom
        return Event(self, mask)

    def restrict(self, event: "Event", target: "OutcomeSpace") -> "Event":
        """
        Image of the event in a space built over a subset of this space's variables.
        """
        names = target.names
        for name in names:
            if self.values_of(name) != target.values_of(name):
                raise UsageError(detail=f"Variable '{name}' differs between the two spaces.")
        projected = self.project(event, names)
        return target.event(
            target.encode(dict(zip(names, values))) for values in sorted(projected)
        )

    def assignments(self, names: Sequence[str]) -> Iterator[Assignment]:
        """
        Every joint assignment of the given variables, in declared value order.
        """
        for values in cartesian(*(self.values_of(name) for name in names)):
            yield dict(zip(names, values))

    def check(self, event: "Event") -> None:
        if event.space is not self and event.space != self:
            raise UsageError(detail="The event belongs to a different outcome space.")
