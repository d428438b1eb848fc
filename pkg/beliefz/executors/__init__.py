from .base import BaseExecutor, create_executor, run_check
from .debug import DebugExecutor
from .pool import ThreadPoolExecutor

__all__ = ["BaseExecutor", "DebugExecutor", "ThreadPoolExecutor", "create_executor", "run_check"]
