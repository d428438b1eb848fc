from typing import TYPE_CHECKING, Any, Iterable, Iterator, Tuple

from beliefz.exceptions import ConfigError, UsageError
from beliefz.state import object_setattr

if TYPE_CHECKING:
    from beliefz.algebra.space import OutcomeSpace


class Event:
    """
    A subset of the atoms of an outcome space, stored as a bit mask.

    Events only combine with events over the same space; anything else is a usage error.
    """

    __slots__ = ("space", "mask")

    space: "OutcomeSpace"
    mask: int

    def __init__(self, space: "OutcomeSpace", mask: int) -> None:
        if mask < 0 or mask >> space.atom_count:
            raise ConfigError(detail=f"Mask {mask} does not fit {space.atom_count} atoms.")
        object_setattr(self, "space", space)
        object_setattr(self, "mask", mask)

    @classmethod
    def from_atoms(cls, space: "OutcomeSpace", atoms: Iterable[int]) -> "Event":
        mask = 0
        count = space.atom_count
        for atom in atoms:
            if not 0 <= atom < count:
                raise ConfigError(detail=f"Atom {atom} is out of range for {count} atoms.")
            mask |= 1 << atom
        return cls(space, mask)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable.")

    def __reduce__(self) -> Any:
        return (self.__class__, (self.space, self.mask))

    def same(self, mask: int) -> "Event":
        """
        An event over the same space with another mask.
        """
        event = Event.__new__(Event)
        object_setattr(event, "space", self.space)
        object_setattr(event, "mask", mask)
        return event

    def check(self, other: Any) -> "Event":
        if not isinstance(other, Event):
            raise TypeError(f"Expected an Event, got {other.__class__.__name__}.")
        if other.space is not self.space and other.space != self.space:
            raise UsageError(detail="Events over different outcome spaces cannot be combined.")
        return other

    @property
    def atoms(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.space.atom_count) - 1

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        mask, atom = self.mask, 0
        while mask:
            if mask & 1:
                yield atom
            mask >>= 1
            atom += 1

    def __contains__(self, atom: int) -> bool:
        return bool(self.mask >> atom & 1) if atom >= 0 else False

    def complement(self) -> "Event":
        return self.same(((1 << self.space.atom_count) - 1) ^ self.mask)

    def intersect(self, other: "Event") -> "Event":
        return self.same(self.mask & self.check(other).mask)

    def union(self, other: "Event") -> "Event":
        return self.same(self.mask | self.check(other).mask)

    def difference(self, other: "Event") -> "Event":
        return self.same(self.mask & ~self.check(other).mask)

    def is_subset(self, other: "Event") -> bool:
        return self.mask & ~self.check(other).mask == 0

    def is_disjoint(self, other: "Event") -> bool:
        return self.mask & self.check(other).mask == 0

    __and__ = intersect
    __or__ = union
    __sub__ = difference
    __le__ = is_subset
    __invert__ = complement

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Event):
            return NotImplemented
        return self.mask == other.mask and (
            self.space is other.space or self.space == other.space
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.space.atom_count))

    def describe(self) -> str:
        return "{" + "; ".join(self.space.label(atom) for atom in self) + "}"

    def __str__(self) -> str:
        return "#[" + ",".join(str(atom) for atom in self) + "]"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self})"
