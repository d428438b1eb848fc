from typing import List, Sequence

from beliefz.events import CheckEvent
from beliefz.executors.base import BaseExecutor, Check, Item, run_check


class DebugExecutor(BaseExecutor):
    """
    A special executor that runs the checks directly instead of deferring them to a thread.
    """

    def do_map(self, check: Check, items: Sequence[Item]) -> List[CheckEvent]:
        return [run_check(check, check_id, subject, self.logger) for check_id, subject in items]
