from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from loguru import logger

from beliefz._mapping import ObjectMapping
from beliefz.algebra.events import Event
from beliefz.algebra.space import OutcomeSpace
from beliefz.hyperreal.number import Hyperreal
from beliefz.measures.hyper import HyperMeasure
from beliefz.scenario.config import REPORT_VALUES, ScenarioConfig
from beliefz.scenario.likelihoods import BaseLikelihood
from beliefz.utils import load_plugin

COINS = ("X1", "X2")
REPORTS = ("R11", "R21", "R12", "R22", "R13", "R23")
FINAL_STAGE_REPORTS = ("R13",)
VARIABLES = COINS + REPORTS

# (label, (X1, X2)) in table order.
HYPOTHESES: Tuple[Tuple[str, Tuple[str, str]], ...] = (
    ("X11", ("heads", "heads")),
    ("X10", ("heads", "tails")),
    ("X01", ("tails", "heads")),
    ("X00", ("tails", "tails")),
)


@lru_cache(maxsize=None)
def build_space() -> OutcomeSpace:
    """
    The coins of both boxes followed by the reports of the three stages: 256 atoms.
    """
    return OutcomeSpace.from_mapping({name: REPORT_VALUES for name in VARIABLES})


@lru_cache(maxsize=None)
def build_naive_space() -> OutcomeSpace:
    """
    The four coin hypotheses alone.
    """
    return OutcomeSpace.from_mapping({name: REPORT_VALUES for name in COINS})


def report_variables(stage: int) -> Tuple[str, ...]:
    if stage == 3:
        return FINAL_STAGE_REPORTS
    return (f"R1{stage}", f"R2{stage}")


def hypothesis_event(space: OutcomeSpace, coins: Tuple[str, str]) -> Event:
    return space.cylinder(dict(zip(COINS, coins)))


def evidence_events(cfg: ScenarioConfig, space: OutcomeSpace) -> List[Event]:
    """
    The cumulative evidence ``S_1, S_2, S_3`` of the configured reports.
    """
    events = []
    running = space.full
    for stage, values in enumerate(cfg.reports, start=1):
        running = running & space.cylinder(dict(zip(report_variables(stage), values)))
        events.append(running)
    return events


def create_likelihood(cfg: ScenarioConfig) -> BaseLikelihood:
    ref = ObjectMapping().families[cfg.family.value]
    return load_plugin(ref, BaseLikelihood)(cfg.gamma_value)


def build_prior(cfg: ScenarioConfig, likelihood: Optional[BaseLikelihood] = None) -> HyperMeasure:
    """
    Fair independent coins followed by the family's report likelihoods, stage by stage. A given
    likelihood replaces the one the configured family names.
    """
    space = build_space()
    family = likelihood or create_likelihood(cfg)
    quarter = Hyperreal.coerce(Fraction(1, 4))
    partial: Dict[Tuple[int, ...], Hyperreal] = {}

    weights = []
    for atom in range(space.atom_count):
        digits = space.digits(atom)
        coins = (digits[0], digits[1])
        reports = {1: digits[2:4], 2: digits[4:6], 3: digits[6:8]}
        weight = quarter
        for stage in (1, 2, 3):
            prefix = digits[: 2 + 2 * stage]
            if prefix not in partial:
                partial[prefix] = weight * family.stage_factor(stage, coins, reports)
            weight = partial[prefix]
        weights.append(weight)

    logger.bind(logger_name="beliefz.scenario").debug(
        f"Built the {cfg.family.value} prior with {len(family.cache)} distinct stage factors"
    )
    return HyperMeasure.trusted(space, weights)
