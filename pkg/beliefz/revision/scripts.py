"""
Upgrade scripts.

A script is a text file with one step per line:

    # the first sequence of radical upgrades
    space naive
    upgrade {X1=heads, X2=heads}
    upgrade {X1=tails, X2=tails}
    upgrade {X1=heads}

Blank lines and lines starting with ``#`` are ignored. The optional ``space`` header selects
the naive four-state coin space (the default) or the full scenario space.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from loguru import logger

from beliefz.algebra.events import Event
from beliefz.algebra.literals import parse_event
from beliefz.algebra.space import OutcomeSpace
from beliefz.exceptions import ConfigError, ScriptError
from beliefz.revision.orders import PlausibilityOrder, order_belief
from beliefz.revision.policies import UpgradePolicy
from beliefz.state import BaseState

SPACES = ("naive", "scenario")


class UpgradeScript(BaseState):
    space: OutcomeSpace
    steps: Tuple[Event, ...]


class ScriptStep(BaseState):
    index: int
    evidence: Optional[Event]
    order: PlausibilityOrder
    belief: Event


def resolve_space(name: str) -> OutcomeSpace:
    from beliefz.scenario.model import build_naive_space, build_space

    if name == "naive":
        return build_naive_space()
    if name == "scenario":
        return build_space()
    raise ConfigError(detail=f"Unknown space '{name}' (expected one of {', '.join(SPACES)}).")


def parse_script(text: str) -> UpgradeScript:
    space: Optional[OutcomeSpace] = None
    literals: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "space":
            if space is not None or literals:
                raise ScriptError(number, "the space header must come first and only once")
            if rest not in SPACES:
                raise ScriptError(number, f"unknown space {rest!r}")
            space = resolve_space(rest)
        elif keyword == "upgrade":
            if not rest:
                raise ScriptError(number, "missing event literal")
            literals.append((number, rest))
        else:
            raise ScriptError(number, f"unknown instruction {keyword!r}")

    space = space or resolve_space("naive")
    steps = []
    for number, literal in literals:
        try:
            steps.append(parse_event(space, literal))
        except ConfigError as exc:
            raise ScriptError(number, str(exc)) from None
    return UpgradeScript(space=space, steps=tuple(steps))


def load_script(path: Union[str, Path]) -> UpgradeScript:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(detail=f"Cannot read script {path}: {exc.strerror}.") from None
    return parse_script(text)


def run_script(script: UpgradeScript, order: Optional[PlausibilityOrder] = None) -> List[ScriptStep]:
    """
    Applies the upgrades in turn, starting from ``order`` or the uniform order.
    """
    policy = UpgradePolicy(order or PlausibilityOrder.uniform(script.space))
    states = policy.run(script.steps)
    results = []
    for index, state in enumerate(states):
        evidence = script.steps[index - 1] if index else None
        results.append(
            ScriptStep(index=index, evidence=evidence, order=state, belief=order_belief(state))
        )
        logger.bind(logger_name="beliefz.revision.scripts").debug(
            f"Step {index}: belief {results[-1].belief.describe()}"
        )
    return results
