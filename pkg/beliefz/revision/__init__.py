from .operators import (
    MATERIALIZE_LIMIT,
    PostulateReport,
    RevisionOperator,
    check_postulates,
    satisfies_postulates,
)
from .orders import (
    PlausibilityOrder,
    operator_from_order,
    operator_to_order,
    order_belief,
    order_revise,
    radical_upgrade,
)
from .policies import (
    BasePolicy,
    ConditioningPolicy,
    FactoredUpgradePolicy,
    UpgradePolicy,
    create_policy,
)
from .iterated import IteratedReport, IteratedStep, check_iterated
from .enumeration import enumerate_operators, enumerate_preorders, ordered_bell
from .independence import dependence_witness, independence_preserved
from .scripts import UpgradeScript, load_script, parse_script, run_script

__all__ = [
    "MATERIALIZE_LIMIT",
    "BasePolicy",
    "ConditioningPolicy",
    "FactoredUpgradePolicy",
    "IteratedReport",
    "IteratedStep",
    "PlausibilityOrder",
    "PostulateReport",
    "RevisionOperator",
    "UpgradePolicy",
    "UpgradeScript",
    "check_iterated",
    "check_postulates",
    "create_policy",
    "dependence_witness",
    "enumerate_operators",
    "enumerate_preorders",
    "independence_preserved",
    "load_script",
    "operator_from_order",
    "operator_to_order",
    "order_belief",
    "order_revise",
    "ordered_bell",
    "parse_script",
    "radical_upgrade",
    "run_script",
    "satisfies_postulates",
]
