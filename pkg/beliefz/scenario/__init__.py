from .config import ScenarioConfig, load_config
from .model import HYPOTHESES, build_naive_space, build_prior, build_space, evidence_events
from .run import OddsTable, StageResult, run
from .compare import Fixture, TableDiff, compare_table, load_fixture

__all__ = [
    "HYPOTHESES",
    "Fixture",
    "OddsTable",
    "ScenarioConfig",
    "StageResult",
    "TableDiff",
    "build_naive_space",
    "build_prior",
    "build_space",
    "compare_table",
    "evidence_events",
    "load_config",
    "load_fixture",
    "run",
]
