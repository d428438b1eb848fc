from typing import Dict

from pydantic import BaseModel


class ObjectMapping(BaseModel):
    @property
    def families(self) -> Dict[str, str]:
        return {
            "independent": "beliefz.scenario.likelihoods:IndependentLikelihood",
            "dependent": "beliefz.scenario.likelihoods:DependentLikelihood",
            "correlated": "beliefz.scenario.likelihoods:CorrelatedLikelihood",
            "footnote4": "beliefz.scenario.likelihoods:SteadyLikelihood",
        }

    @property
    def policies(self) -> Dict[str, str]:
        return {
            "conditioning": "beliefz.revision.policies:ConditioningPolicy",
            "upgrade": "beliefz.revision.policies:UpgradePolicy",
            "factored": "beliefz.revision.policies:FactoredUpgradePolicy",
        }

    @property
    def executors(self) -> Dict[str, str]:
        return {
            "debug": "beliefz.executors.debug:DebugExecutor",
            "threadpool": "beliefz.executors.pool:ThreadPoolExecutor",
        }
