import pytest

from beliefz.algebra.space import OutcomeSpace
from beliefz.enums import Family
from beliefz.revision.orders import PlausibilityOrder
from beliefz.scenario.config import ScenarioConfig
from beliefz.scenario.model import build_naive_space, build_prior, build_space
from beliefz.scenario.run import run


@pytest.fixture
def naive_space():
    return build_naive_space()


@pytest.fixture(scope="session")
def scenario_space():
    return build_space()


@pytest.fixture
def three_atoms():
    return OutcomeSpace.anonymous(3)


@pytest.fixture
def four_atoms():
    return OutcomeSpace.anonymous(4)


@pytest.fixture
def uniform_order(naive_space):
    return PlausibilityOrder.uniform(naive_space)


@pytest.fixture(scope="session")
def independent_prior():
    return build_prior(ScenarioConfig(family=Family.INDEPENDENT))


@pytest.fixture(scope="session")
def tables():
    """
    Symbolic odds tables of every family, built once per session.
    """
    return {family: run(ScenarioConfig(family=family)) for family in Family}
