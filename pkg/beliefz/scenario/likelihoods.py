from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, Hashable, Mapping, Tuple

from beliefz.hyperreal.number import ONE, Hyperreal

Coins = Tuple[int, int]
Reports = Mapping[int, Tuple[int, ...]]

HALF = Hyperreal.coerce(Fraction(1, 2))
FINAL_STAGE = 3


class BaseLikelihood(ABC):
    """
    Report likelihoods of one family. Value index 1 is heads, 0 is tails.

    ``stage_factor`` gives the probability of the stage's reports given the coins and the
    earlier reports. At the final stage a single report is made, on box 1; the box 2 coordinate of
    that stage is split evenly and never observed.

    Args:
        gamma: The small parameter, the infinitesimal or a rational in (0, 1).
    """

    alias: str = ""

    def __init__(self, gamma: Hyperreal) -> None:
        self.gamma = gamma
        self.cache: Dict[Hashable, Hyperreal] = {}

    def exponent(self, stage: int) -> int:
        return stage

    def single(self, stage: int, report: int, coin: int) -> Hyperreal:
        """
        The likelihood of one report that is right with odds ``1 : gamma^e``.
        """
        power = self.gamma ** self.exponent(stage)
        weight = ONE if report == coin else power
        return weight / (1 + power)

    def key(self, stage: int, coins: Coins, reports: Reports) -> Hashable:
        return stage, coins, reports[stage]

    def stage_factor(self, stage: int, coins: Coins, reports: Reports) -> Hyperreal:
        key = self.key(stage, coins, reports)
        if key not in self.cache:
            self.cache[key] = self.compute(stage, coins, reports)
        return self.cache[key]

    def final(self, coins: Coins, reports: Reports) -> Hyperreal:
        return self.single(FINAL_STAGE, reports[FINAL_STAGE][0], coins[0]) * HALF

    @abstractmethod
    def compute(self, stage: int, coins: Coins, reports: Reports) -> Hyperreal:
        ...


class IndependentLikelihood(BaseLikelihood):
    """
    Every report is independent of the other reports given the coins and is wrong with odds
    ``gamma^t`` at stage ``t``.
    """

    alias = "independent"

    def compute(self, stage: int, coins: Coins, reports: Reports) -> Hyperreal:
        if stage == FINAL_STAGE:
            return self.final(coins, reports)
        first, second = reports[stage]
        return self.single(stage, first, coins[0]) * self.single(stage, second, coins[1])


class SteadyLikelihood(IndependentLikelihood):
    """
    Independent reports whose reliability stops growing after the first stage.
    """

    alias = "footnote4"

    def exponent(self, stage: int) -> int:
        return 1 if stage == 1 else 2


class DependentLikelihood(BaseLikelihood):
    """
    The two reports of a stage stand or fall together: one wrong report costs ``gamma^(1+t)``,
    two cost ``gamma^(2+t)``.
    """

    alias = "dependent"

    def compute(self, stage: int, coins: Coins, reports: Reports) -> Hyperreal:
        if stage == FINAL_STAGE:
            return self.final(coins, reports)
        one = self.gamma ** (1 + stage)
        both = self.gamma ** (2 + stage)
        wrong = sum(report != coin for report, coin in zip(reports[stage], coins))
        weight = (ONE, one, both)[wrong]
        return weight / (1 + 2 * one + both)


class CorrelatedLikelihood(BaseLikelihood):
    """
    Independent reports for the first two stages. The final report depends on the coins and
    on both reports of stage 2: it mostly agrees with the first reporter unless both stage 2
    reports were false.
    """

    alias = "correlated"

    def key(self, stage: int, coins: Coins, reports: Reports) -> Hashable:
        if stage == FINAL_STAGE:
            return stage, coins, reports[stage], reports[FINAL_STAGE - 1]
        return super().key(stage, coins, reports)

    def elmer(self, report: int, coins: Coins, carla: int, dora: int) -> Hyperreal:
        gamma = self.gamma
        normalizer = 1 + gamma**2 + gamma**3 + gamma**5
        first, second = coins
        if first != carla:
            listed, weight = first, (ONE if dora != second else gamma**2)
        else:
            listed, weight = 1 - first, (gamma**3 if dora != second else gamma**5)
        value = weight / normalizer
        return value if report == listed else 1 - value

    def compute(self, stage: int, coins: Coins, reports: Reports) -> Hyperreal:
        if stage == FINAL_STAGE:
            carla, dora = reports[FINAL_STAGE - 1]
            return self.elmer(reports[stage][0], coins, carla, dora) * HALF
        first, second = reports[stage]
        return self.single(stage, first, coins[0]) * self.single(stage, second, coins[1])
