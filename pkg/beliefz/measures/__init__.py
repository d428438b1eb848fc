from .hyper import HyperMeasure, belief_set, condition, measure_of, revise_by_measure
from .lex import LexSystem
from .conditional import ConditionalProbability, cond_prob_eval
from .conversions import (
    cond_to_operator,
    hyper_to_operator,
    lex_to_hyper,
    operator_to_conditional,
    operator_to_hyper,
    order_to_lex,
)

__all__ = [
    "ConditionalProbability",
    "HyperMeasure",
    "LexSystem",
    "belief_set",
    "cond_prob_eval",
    "cond_to_operator",
    "condition",
    "hyper_to_operator",
    "lex_to_hyper",
    "measure_of",
    "operator_to_conditional",
    "operator_to_hyper",
    "order_to_lex",
    "revise_by_measure",
]
