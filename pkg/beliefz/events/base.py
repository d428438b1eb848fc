from typing import Any, Optional

from pydantic import BaseModel, ConfigDict

from beliefz.events.constants import CHECK_PASSED


class VerificationEvent(BaseModel):
    """
    The event itself.

    Args:
        code: The code type for the event
        alias: The alias given to the executor that produced it.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)
    code: int
    alias: Optional[str] = None

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} (code={self.code})>"


class CheckEvent(VerificationEvent):
    """
    Event related to the run of one verification check within an executor.

    Args:
        check_id: The identifier given to the check.
        return_value: The value returned by the check.
        exception: The exception raised by the check.
        traceback: A formatted traceback for the exception.
    """

    check_id: str
    return_value: Any = None
    exception: Optional[BaseException] = None
    traceback: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.code == CHECK_PASSED
