"""
Event literals.

    {X1=heads, R13=heads}   cylinder of the listed assignments
    {}                      the full event
    #[0,3,17]               explicit atom list
    #[]                     the empty event
"""

import re

from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ConfigError
from beliefz.typing import Assignment

ATOMS_REGEX = re.compile(r"^#\[\s*(?P<atoms>[\d\s,]*)\]$")
CYLINDER_REGEX = re.compile(r"^\{(?P<body>[^{}]*)\}$")
ASSIGNMENT_REGEX = re.compile(r"^\s*(?P<name>[A-Za-z_][\w]*)\s*=\s*(?P<value>[\w-]+)\s*$")


def parse_event(space: OutcomeSpace, text: str) -> Event:
    literal = text.strip()

    match = ATOMS_REGEX.match(literal)
    if match:
        body = match.group("atoms").strip()
        if not body:
            return space.empty
        try:
            atoms = [int(part) for part in body.split(",")]
        except ValueError:
            raise ConfigError(detail=f"Invalid atom list {text!r}.") from None
        return space.event(atoms)

    match = CYLINDER_REGEX.match(literal)
    if match:
        body = match.group("body").strip()
        assignments: Assignment = {}
        if body:
            for part in body.split(","):
                assignment = ASSIGNMENT_REGEX.match(part)
                if not assignment:
                    raise ConfigError(detail=f"Invalid assignment {part.strip()!r} in {text!r}.")
                name, value = assignment.group("name"), assignment.group("value")
                if assignments.get(name, value) != value:
                    raise ConfigError(detail=f"Conflicting values for '{name}' in {text!r}.")
                assignments[name] = value
        return space.cylinder(assignments)

    raise ConfigError(detail=f"Unrecognized event literal {text!r}.")


def format_event(event: Event) -> str:
    return str(event)
