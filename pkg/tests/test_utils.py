import sys
from fractions import Fraction
from types import ModuleType

import pytest

from beliefz.exceptions import ConfigError
from beliefz.executors.base import BaseExecutor
from beliefz.hyperreal.number import Hyperreal
from beliefz.revision.policies import BasePolicy, UpgradePolicy
from beliefz.scenario.likelihoods import BaseLikelihood, SteadyLikelihood
from beliefz.utils import load_plugin, ref_to_obj, to_rational


class TestToRational:
    @pytest.mark.parametrize(
        "value,expected",
        [("3", Fraction(3)), (" -1/4 ", Fraction(-1, 4)), ("2 / 6", Fraction(1, 3)), (5, Fraction(5)), (Fraction(1, 7), Fraction(1, 7))],
        ids=["integer text", "negative fraction", "spaced fraction", "int", "fraction"],
    )
    def test_valid(self, value, expected):
        assert to_rational(value) == expected

    @pytest.mark.parametrize(
        "value",
        ["0.5", "1/", "one", "1/0", 0.5, True, None],
        ids=["decimal text", "dangling slash", "text", "zero denominator", "float", "bool", "none"],
    )
    def test_invalid(self, value):
        pytest.raises(ConfigError, to_rational, value)


class TestRefToObj:
    def test_policy_ref(self):
        assert ref_to_obj("beliefz.revision.policies:UpgradePolicy") is UpgradePolicy

    def test_nested_ref(self):
        assert ref_to_obj("beliefz.hyperreal.number:Hyperreal.coerce") == Hyperreal.coerce

    def test_module_registered_at_runtime(self, monkeypatch):
        module = ModuleType("beliefz_plugins")
        module.families = {"steady": SteadyLikelihood}
        monkeypatch.setitem(sys.modules, "beliefz_plugins", module)

        assert ref_to_obj("beliefz_plugins:families") == {"steady": SteadyLikelihood}

    @pytest.mark.parametrize(
        "ref,error,text",
        [
            (object(), TypeError, "strings"),
            ("beliefz.scenario.likelihoods", ConfigError, "module:name"),
            ("beliefz.scenario.likelihoods:", ConfigError, "module:name"),
            ("beliefz.nosuch:Likelihood", LookupError, "could not import"),
            ("beliefz.scenario.likelihoods:QuantumLikelihood", LookupError, "has no QuantumLikelihood"),
        ],
        ids=["raw object", "no name", "empty name", "missing module", "missing attribute"],
    )
    def test_invalid_refs(self, ref, error, text):
        with pytest.raises(error) as raised:
            ref_to_obj(ref)

        assert text in str(raised.value)


class TestLoadPlugin:
    @pytest.mark.parametrize(
        "ref,base",
        [
            ("beliefz.scenario.likelihoods:SteadyLikelihood", BaseLikelihood),
            ("beliefz.revision.policies:FactoredUpgradePolicy", BasePolicy),
            ("beliefz.executors.pool:ThreadPoolExecutor", BaseExecutor),
        ],
        ids=["likelihood", "policy", "executor"],
    )
    def test_plugin(self, ref, base):
        assert issubclass(load_plugin(ref, base), base)

    @pytest.mark.parametrize(
        "ref",
        ["beliefz.revision.policies:UpgradePolicy", "beliefz.scenario.model:build_prior"],
        ids=["wrong base", "function"],
    )
    def test_not_a_plugin(self, ref):
        with pytest.raises(ConfigError) as raised:
            load_plugin(ref, BaseLikelihood)

        assert "does not name a BaseLikelihood" in str(raised.value)
