import re
from fractions import Fraction
from importlib import import_module
from typing import Any, Type, TypeVar

from beliefz.exceptions import BeliefzLookupError, ConfigError
from beliefz.typing import RationalLike

T = TypeVar("T")

RATIONAL_REGEX = re.compile(r"^\s*(?P<numerator>[+-]?\d+)\s*(?:/\s*(?P<denominator>\d+))?\s*$")


def to_rational(value: RationalLike) -> Fraction:
    """
    Converts the given value to an exact rational.

    Accepts integers, fractions and strings of the form "p" or "p/q". Floats are refused.
    """
    if isinstance(value, bool):
        raise ConfigError(detail=f"Expected a rational, got {value!r}.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_REGEX.match(value)
        if not match:
            raise ConfigError(detail=f"Invalid rational string {value!r}.")
        denominator = int(match.group("denominator") or 1)
        if denominator == 0:
            raise ConfigError(detail=f"Zero denominator in {value!r}.")
        return Fraction(int(match.group("numerator")), denominator)
    raise ConfigError(detail=f"Expected a rational, got {value.__class__.__name__}.")


def ref_to_obj(ref: str) -> Any:
    """
    Resolves a ``"package.module:Name.attribute"`` reference, the form the alias maps of
    ``beliefz._mapping`` use for likelihood families, policies and executors.
    """
    if not isinstance(ref, str):
        raise TypeError("References must be strings")
    modulename, sep, path = ref.partition(":")
    if not sep or not modulename or not path:
        raise ConfigError(detail=f"Invalid reference {ref!r}, expected 'module:name'.")

    try:
        obj = import_module(modulename)
    except ImportError:
        raise BeliefzLookupError(f"Error resolving reference {ref}: could not import module") from None

    for name in path.split("."):
        try:
            obj = getattr(obj, name)
        except AttributeError:
            raise BeliefzLookupError(
                f"Error resolving reference {ref}: {modulename} has no {path}"
            ) from None
    return obj


def load_plugin(ref: str, base: Type[T]) -> Type[T]:
    """
    Resolves ``ref`` and checks that it names a subclass of ``base``.
    """
    obj = ref_to_obj(ref)
    if not (isinstance(obj, type) and issubclass(obj, base)):
        raise ConfigError(detail=f"{ref} does not name a {base.__name__}.")
    return obj
