from importlib import resources
from typing import Any, List, Mapping, Optional, Tuple

import yaml
from loguru import logger

from beliefz.enums import Family
from beliefz.exceptions import ConfigError, FixtureLookupError
from beliefz.hyperreal.number import Hyperreal
from beliefz.scenario.run import LABELS, OddsTable
from beliefz.state import BaseState


class FixtureStage(BaseState):
    """
    Expected values for one stage. ``evidence`` is the value checked, ``printed_evidence`` the
    value as printed in the source table when the two are worth keeping apart.
    """

    stage: int
    odds: Tuple[Hyperreal, ...]
    evidence: Hyperreal
    printed_evidence: Optional[Hyperreal] = None


class Fixture(BaseState):
    family: Family
    description: str = ""
    stages: Tuple[FixtureStage, ...]


class CellDiff(BaseState):
    stage: int
    row: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"stage {self.stage} {self.row}: expected {self.expected}, got {self.actual}"


class TableDiff(BaseState):
    family: Family
    mismatches: Tuple[CellDiff, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _value(raw: Any, where: str) -> Hyperreal:
    try:
        return Hyperreal(str(raw))
    except ConfigError as exc:
        raise ConfigError(detail=f"Invalid value at {where}: {exc}") from None


def fixture_from_mapping(data: Mapping[str, Any]) -> Fixture:
    try:
        family = Family(data["family"])
        stages = []
        for entry in data["stages"]:
            stage = int(entry["stage"])
            odds = entry["odds"]
            stages.append(
                FixtureStage(
                    stage=stage,
                    odds=tuple(_value(odds[label], f"stage {stage} {label}") for label in LABELS),
                    evidence=_value(entry["evidence"], f"stage {stage} evidence"),
                    printed_evidence=(
                        _value(entry["printed_evidence"], f"stage {stage} printed evidence")
                        if entry.get("printed_evidence") is not None
                        else None
                    ),
                )
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(detail=f"Malformed fixture: {exc!r}.") from None
    return Fixture(family=family, description=str(data.get("description", "")), stages=tuple(stages))


def load_fixture(family: str) -> Fixture:
    if family not in {item.value for item in Family}:
        raise FixtureLookupError(family)
    source = resources.files("beliefz.scenario") / "fixtures" / f"{family}.yaml"
    if not source.is_file():
        raise FixtureLookupError(family)
    return fixture_from_mapping(yaml.safe_load(source.read_text()))


def leading_equal(left: Hyperreal, right: Hyperreal) -> bool:
    """
    Equality up to the leading term: same order of magnitude and same leading coefficient.
    """
    if not left or not right:
        return not left and not right
    return left.leading() == right.leading()


def compare_table(actual: OddsTable, expected: Fixture) -> TableDiff:
    """
    Odds are compared exactly and evidence at leading order. A printed evidence value that
    disagrees at leading order with the checked one becomes a note, not a mismatch.
    """
    log = logger.bind(logger_name="beliefz.scenario.compare")
    mismatches: List[CellDiff] = []
    notes: List[str] = []

    for fixture_stage in expected.stages:
        stage = fixture_stage.stage
        found = [result for result in actual.stages if result.stage == stage]
        if not found:
            mismatches.append(CellDiff(stage=stage, row="stage", expected="present", actual="missing"))
            continue
        result = found[0]
        for label, want, got in zip(LABELS, fixture_stage.odds, result.odds):
            if want != got:
                mismatches.append(CellDiff(stage=stage, row=label, expected=str(want), actual=str(got)))
        if not leading_equal(fixture_stage.evidence, result.evidence):
            mismatches.append(
                CellDiff(
                    stage=stage,
                    row="evidence",
                    expected=str(fixture_stage.evidence),
                    actual=str(result.evidence),
                )
            )
        printed = fixture_stage.printed_evidence
        if printed is not None and not leading_equal(printed, fixture_stage.evidence):
            note = (
                f"stage {stage} evidence: the source table prints {printed}, "
                f"the likelihoods give {fixture_stage.evidence} at leading order"
            )
            log.warning(note)
            notes.append(note)

    return TableDiff(family=actual.family, mismatches=tuple(mismatches), notes=tuple(notes))
