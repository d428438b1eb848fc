from .events import Event
from .literals import format_event, parse_event
from .space import OutcomeSpace, Variable

__all__ = ["Event", "OutcomeSpace", "Variable", "format_event", "parse_event"]
