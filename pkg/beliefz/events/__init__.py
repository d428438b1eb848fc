from .base import CheckEvent, VerificationEvent
from .constants import CHECK_ERROR, CHECK_FAILED, CHECK_PASSED

__all__ = [
    "CHECK_ERROR",
    "CHECK_FAILED",
    "CHECK_PASSED",
    "CheckEvent",
    "VerificationEvent",
]
