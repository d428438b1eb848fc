from fractions import Fraction
from typing import List

from beliefz.exceptions import ValidationError
from beliefz.hyperreal.number import Hyperreal
from beliefz.hyperreal.polynomial import EpsPoly
from beliefz.measures.conditional import ConditionalProbability
from beliefz.measures.hyper import HyperMeasure
from beliefz.measures.lex import LexSystem
from beliefz.revision.operators import RevisionOperator
from beliefz.revision.orders import PlausibilityOrder, operator_to_order


def lex_to_hyper(system: LexSystem) -> HyperMeasure:
    """
    Collapses a partitioning lexicographic system into one regular hyperreal measure:

        mu(w) = mu_0(w) + sum over 0 < m < n of (mu_m(w) - mu_0(w)) * e^m

    Atoms first supported at level ``m`` end up of order ``e^m``.
    """
    if not system.is_partitioning:
        raise ValidationError(detail="Only partitioning systems can be collapsed to a measure.")
    base = system.levels[0]
    weights: List[Hyperreal] = []
    for atom in range(system.space.atom_count):
        coefficients = [base[atom]] + [
            level[atom] - base[atom] for level in system.levels[1:]
        ]
        weights.append(Hyperreal.from_poly(EpsPoly.from_dense(coefficients)))
    return HyperMeasure(space=system.space, weights=tuple(weights))


def order_to_lex(order: PlausibilityOrder) -> LexSystem:
    """
    One level per rank block, uniform on the block.
    """
    levels = []
    for block in order.blocks():
        share = Fraction(1, block.size)
        levels.append(
            tuple(share if atom in block else Fraction(0) for atom in range(order.space.atom_count))
        )
    return LexSystem(space=order.space, levels=tuple(levels))


def cond_to_operator(probability: ConditionalProbability) -> RevisionOperator:
    space = probability.space
    return RevisionOperator.materialize(space, probability.support(space.full), probability.support)


def hyper_to_operator(measure: HyperMeasure) -> RevisionOperator:
    if not measure.is_regular:
        raise ValidationError(detail="Only regular measures induce a revision operator.")
    return RevisionOperator.materialize(
        measure.space, measure.belief_set(), measure.revise_by_measure
    )


def operator_to_conditional(operator: RevisionOperator) -> ConditionalProbability:
    return ConditionalProbability(backing=order_to_lex(operator_to_order(operator)))


def operator_to_hyper(operator: RevisionOperator) -> HyperMeasure:
    return lex_to_hyper(order_to_lex(operator_to_order(operator)))
