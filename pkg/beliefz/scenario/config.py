from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import yaml
from pydantic import ValidationError as PydanticValidationError
from pydantic import field_validator

from beliefz.enums import Family
from beliefz.exceptions import ConfigError
from beliefz.hyperreal.number import EPSILON, Hyperreal
from beliefz.state import BaseState
from beliefz.utils import to_rational

REPORT_VALUES = ("tails", "heads")
DEFAULT_REPORTS: Tuple[Tuple[str, ...], ...] = (("heads", "heads"), ("tails", "tails"), ("heads",))
STAGES = 3


class ScenarioConfig(BaseState):
    """
    The two-coin scenario.

    Args:
        family: How the reports depend on the coins and on each other.
        gamma: ``None`` for the symbolic infinitesimal, otherwise a rational in (0, 1).
        reports: The report values per stage: a pair for stages 1 and 2, the single final report
            on box 1 for stage 3.
    """

    family: Family = Family.INDEPENDENT
    gamma: Optional[Fraction] = None
    reports: Tuple[Tuple[str, ...], ...] = DEFAULT_REPORTS

    @field_validator("gamma")
    @classmethod
    def validate_gamma(cls, value: Optional[Fraction]) -> Optional[Fraction]:
        if value is not None and not 0 < value < 1:
            raise ValueError("gamma must lie strictly between 0 and 1")
        return value

    @field_validator("reports")
    @classmethod
    def validate_reports(cls, value: Tuple[Tuple[str, ...], ...]) -> Tuple[Tuple[str, ...], ...]:
        if len(value) != STAGES:
            raise ValueError(f"expected reports for {STAGES} stages")
        for stage, values in enumerate(value, start=1):
            expected = 1 if stage == STAGES else 2
            if len(values) != expected:
                raise ValueError(f"stage {stage} needs {expected} report value(s)")
            for report in values:
                if report not in REPORT_VALUES:
                    raise ValueError(f"unknown report value {report!r} at stage {stage}")
        return value

    @property
    def symbolic(self) -> bool:
        return self.gamma is None

    @property
    def gamma_value(self) -> Hyperreal:
        return EPSILON if self.gamma is None else Hyperreal.coerce(self.gamma)

    @classmethod
    def from_mapping(cls, data: Optional[Mapping[str, Any]]) -> "ScenarioConfig":
        """
        Builds a config from a loosely typed document, as read from YAML or the command line.
        """
        data = dict(data or {})
        unknown = set(data) - {"family", "gamma", "reports"}
        if unknown:
            raise ConfigError(detail=f"Unknown field(s): {', '.join(sorted(map(str, unknown)))}.")

        values: Dict[str, Any] = {}
        if data.get("family") is not None:
            family = str(data["family"])
            if family not in {item.value for item in Family}:
                raise ConfigError(detail=f"Invalid field 'family': unknown family {family!r}.")
            values["family"] = Family(family)
        gamma = data.get("gamma")
        if gamma is not None and str(gamma).strip() not in ("eps", "e", "g"):
            try:
                values["gamma"] = to_rational(gamma)
            except ConfigError as exc:
                raise ConfigError(detail=f"Invalid field 'gamma': {exc}") from None
        if data.get("reports") is not None:
            values["reports"] = _parse_reports(data["reports"])

        try:
            return cls(**values)
        except PydanticValidationError as exc:
            error = exc.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or "config"
            raise ConfigError(detail=f"Invalid field '{field}': {error['msg']}.") from None


def _parse_reports(reports: Any) -> Tuple[Tuple[str, ...], ...]:
    if isinstance(reports, Mapping):
        try:
            ordered = sorted((int(stage), values) for stage, values in reports.items())
        except (TypeError, ValueError):
            raise ConfigError(detail="Invalid field 'reports': stages must be integers.") from None
        if [stage for stage, _ in ordered] != list(range(1, STAGES + 1)):
            raise ConfigError(detail=f"Invalid field 'reports': expected stages 1 to {STAGES}.")
        reports = [values for _, values in ordered]
    if not isinstance(reports, (list, tuple)):
        raise ConfigError(detail="Invalid field 'reports': expected a mapping of stages.")
    parsed = []
    for values in reports:
        if isinstance(values, str):
            values = [values]
        parsed.append(tuple(str(value) for value in values))
    return tuple(parsed)


def load_config(path: Union[str, Path]) -> ScenarioConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(detail=f"Cannot read config {path}: {exc.strerror}.") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(detail=f"Config {path} is not valid YAML: {exc}.") from None
    if data is not None and not isinstance(data, Mapping):
        raise ConfigError(detail=f"Config {path} must be a mapping.")
    return ScenarioConfig.from_mapping(data)
