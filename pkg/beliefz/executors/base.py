import sys
import traceback
from abc import ABC, abstractmethod
from traceback import format_tb
from typing import Any, Callable, List, Optional, Sequence, Tuple

from loguru import logger
from loguru._logger import Logger

from beliefz.events import CheckEvent
from beliefz.events.constants import CHECK_ERROR, CHECK_FAILED, CHECK_PASSED
from beliefz.exceptions import UsageError
from beliefz.state import BaseStateExtra

Check = Callable[[Any], Any]
Item = Tuple[str, Any]


class BaseExecutor(BaseStateExtra, ABC):
    """
    Base model for the executors. An executor runs verification checks over a list of subjects
    and hands back one CheckEvent per subject, in submission order whatever the scheduling.

    Beliefz uses loguru for its logging as it is more descriptive and intuitive.
    """

    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self.alias = "default"
        self.logger = logger

    def start(self, alias: str) -> None:
        """
        Called before the first batch of checks.

        Args:
            alias - The alias of this executor.
        """
        self.alias = alias
        self.logger = logger.bind(logger_name=f"beliefz.executors.{alias}")

    def shutdown(self, wait: bool = True) -> None:
        """
        Shuts down the executor.

        Args:
            wait - Boolean indicating to wait until all submitted checks have been executed.
        """

    def map_checks(self, check: Check, items: Sequence[Item]) -> List[CheckEvent]:
        """
        Runs ``check`` on every ``(check_id, subject)`` pair.
        """
        events = self.do_map(check, items)
        for event in events:
            event.alias = self.alias
        failed = sum(not event.passed for event in events)
        self.logger.debug(f"Ran {len(events)} checks, {failed} did not pass")
        return events

    @abstractmethod
    def do_map(self, check: Check, items: Sequence[Item]) -> List[CheckEvent]:
        """
        Executes the actual checks.
        """
        ...


def run_check(
    check: Check, check_id: str, subject: Any, _logger: Optional["Logger"] = None
) -> CheckEvent:
    """
    Called by executors to run one check. A truthy return value passes the check, a falsy one
    fails it and an exception is reported as an error event.
    """
    if not _logger:
        _logger = logger

    try:
        return_value = check(subject)
    except BaseException:
        exc, trace_back = sys.exc_info()[1:]
        formatted_trace_back = "".join(format_tb(trace_back))
        _logger.warning(f"Check '{check_id}' raised {exc!r}")
        event = CheckEvent(
            code=CHECK_ERROR,
            check_id=check_id,
            exception=exc,
            traceback=formatted_trace_back,
        )
        traceback.clear_frames(trace_back)
        del trace_back
        return event

    code = CHECK_PASSED if return_value else CHECK_FAILED
    if code == CHECK_FAILED:
        _logger.info(f"Check '{check_id}' failed")
    return CheckEvent(code=code, check_id=check_id, return_value=return_value)


def create_executor(workers: int = 1) -> BaseExecutor:
    """
    The inline executor for a single worker, a thread pool otherwise.
    """
    from beliefz._mapping import ObjectMapping
    from beliefz.utils import load_plugin

    if workers < 1:
        raise UsageError(detail=f"The number of workers must be positive, got {workers}.")
    alias = "debug" if workers == 1 else "threadpool"
    kwargs = {} if workers == 1 else {"max_workers": workers}
    executor = load_plugin(ObjectMapping().executors[alias], BaseExecutor)(**kwargs)
    executor.start(alias)
    return executor
