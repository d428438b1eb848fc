from fractions import Fraction
from typing import Optional, Tuple

from loguru import logger

from beliefz.algebra.events import Event
from beliefz.enums import Family
from beliefz.exceptions import ConditioningError, UsageError
from beliefz.hyperreal.number import ONE, Hyperreal, hsum
from beliefz.measures.hyper import HyperMeasure
from beliefz.scenario.config import ScenarioConfig
from beliefz.scenario.model import (
    HYPOTHESES,
    build_naive_space,
    build_prior,
    build_space,
    evidence_events,
    hypothesis_event,
)
from beliefz.state import BaseState

LABELS = tuple(label for label, _ in HYPOTHESES)


class StageResult(BaseState):
    """
    One column of an odds table.

    Args:
        stage: 0 for the prior, then 1, 2 and 3.
        masses: Joint probability of each hypothesis with the evidence so far.
        odds: The masses divided by the largest one.
        evidence: Probability of the evidence so far.
        argmax: Label of the most probable hypothesis, the first one on ties.
        belief: The belief set over the four coin hypotheses. A numeric run believes its most
            probable hypotheses.
    """

    stage: int
    masses: Tuple[Hyperreal, ...]
    odds: Tuple[Hyperreal, ...]
    evidence: Hyperreal
    argmax: str
    belief: Event

    def odds_for(self, label: str) -> Hyperreal:
        return self.odds[LABELS.index(label)]


class OddsTable(BaseState):
    family: Family
    gamma: Optional[Fraction] = None
    stages: Tuple[StageResult, ...]

    @property
    def hypotheses(self) -> Tuple[str, ...]:
        return LABELS

    @property
    def symbolic(self) -> bool:
        return self.gamma is None

    def stage(self, stage: int) -> StageResult:
        for result in self.stages:
            if result.stage == stage:
                return result
        raise UsageError(detail=f"The table has no stage {stage}.")

    def row(self, label: str) -> Tuple[Hyperreal, ...]:
        return tuple(result.odds_for(label) for result in self.stages)


def _stage_result(
    stage: int, prior: HyperMeasure, evidence: Event, symbolic: bool = True
) -> StageResult:
    space = prior.space
    masses = tuple(
        prior.measure_of(hypothesis_event(space, coins) & evidence) for _, coins in HYPOTHESES
    )
    total = hsum(masses)
    if not total:
        raise ConditioningError(evidence)

    best = 0
    for index, mass in enumerate(masses):
        if mass > masses[best]:
            best = index
    scale = masses[best].reciprocal()
    odds = tuple(ONE if index == best else mass * scale for index, mass in enumerate(masses))

    if symbolic:
        belief = space.restrict(prior.revise_by_measure(evidence), build_naive_space())
    else:
        # standard weights share one order of magnitude, so the belief is the most probable set
        naive = build_naive_space()
        belief = naive.empty
        for (_, coins), mass in zip(HYPOTHESES, masses):
            if mass == masses[best]:
                belief = belief | hypothesis_event(naive, coins)
    return StageResult(
        stage=stage,
        masses=masses,
        odds=odds,
        evidence=total,
        argmax=LABELS[best],
        belief=belief,
    )


def run(cfg: ScenarioConfig, prior: Optional[HyperMeasure] = None) -> OddsTable:
    """
    Conditions the prior on the cumulative reports and tabulates the odds of the four coin
    hypotheses after every stage.
    """
    log = logger.bind(logger_name="beliefz.scenario")
    space = build_space()
    prior = prior or build_prior(cfg)

    stages = [_stage_result(0, prior, space.full, cfg.symbolic)]
    for stage, evidence in enumerate(evidence_events(cfg, space), start=1):
        result = _stage_result(stage, prior, evidence, cfg.symbolic)
        log.debug(f"Stage {stage}: evidence {result.evidence}, most probable {result.argmax}")
        stages.append(result)

    table = OddsTable(family=cfg.family, gamma=cfg.gamma, stages=tuple(stages))
    log.info(f"Ran the {cfg.family.value} scenario over {len(stages) - 1} stages")
    return table
