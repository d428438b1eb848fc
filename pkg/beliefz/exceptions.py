from typing import Any, Optional


class BeliefzException(Exception):
    """
    Base exception for all Beliefz thrown error exceptions.
    """

    detail = None

    def __init__(self, *args: Any, detail: str = "") -> None:
        if detail:
            self.detail = detail
        super().__init__(*(str(arg) for arg in args if arg), detail)

    def __repr__(self) -> str:
        if self.detail:
            return f"{self.__class__.__name__} - {self.detail}"
        return self.__class__.__name__

    def __str__(self) -> str:
        return "".join(str(arg) for arg in self.args if arg).strip()


class DomainError(BeliefzException):
    """
    Raised when an arithmetic operation leaves its domain (division by zero, the standard part
    of an unlimited value, the valuation of zero).
    """

    detail = "Operation is undefined for the given value."


class ConditioningError(DomainError):
    detail = "Cannot condition on an event of probability zero: {event}."

    def __init__(self, event: Any) -> None:
        super().__init__(detail=self.detail.format(event=event))


class ConfigError(BeliefzException):
    """
    Raised for invalid user supplied configuration: unknown variables or values, malformed
    literals and invalid scenario documents.
    """

    detail = "Invalid configuration."


class ScriptError(ConfigError):
    detail = "Malformed script line {line}: {reason}"

    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        super().__init__(detail=self.detail.format(line=line, reason=reason))


class UsageError(BeliefzException):
    """
    Raised when objects are combined in ways that make no sense, for instance events that live
    over different outcome spaces.
    """

    detail = "Invalid usage."


class ValidationError(BeliefzException):
    detail = "Validation failed."


class SizeError(BeliefzException):
    detail = "The {what} has {size} atoms which exceeds the limit of {limit}."

    def __init__(self, what: str, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(detail=self.detail.format(what=what, size=size, limit=limit))


class BaseLookupError(LookupError):
    """
    Base lookup error for all the Beliefz lookup errors.
    """

    detail = "Not found."

    def __init__(self, detail: Optional[str] = None):
        if not detail:
            detail = self.detail
        super().__init__(detail)


class BeliefzLookupError(BaseLookupError):
    """
    general LookupError for Beliefz.
    """

    ...


class FixtureLookupError(BaseLookupError):
    detail = "No fixture for the family {family} has been found."

    def __init__(self, family: str):
        detail = self.detail.format(family=family)
        super().__init__(detail=detail)
