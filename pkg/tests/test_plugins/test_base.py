"""Tests for the plugin base class and registry."""

import math

import pytest

from fock_ida.cli._helpers import get_plugin_registry
from fock_ida.core.config import parse_config
from fock_ida.core.models import ExperimentId
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentRegistry


class TestExperimentRegistry:
    def test_register_and_get(self, mock_registry, mock_experiment):
        assert mock_registry.get_plugin(ExperimentId.HS_IDENTITY) is mock_experiment
        assert mock_registry.get_plugin("E3-hs-identity") is mock_experiment
        assert mock_registry.get_plugin("E9-missing") is None

    def test_register_twice(self, mock_registry, mock_experiment):
        mock_registry.register(mock_experiment)
        assert len(mock_registry.get_all_plugins()) == 1

    def test_empty_discovery(self):
        registry = ExperimentRegistry()
        registry.discover_plugins()
        assert isinstance(registry.get_all_plugins(), dict)

    def test_builtin_registry(self):
        plugins = get_plugin_registry().get_all_plugins()
        assert list(plugins) == [e.value for e in ExperimentId]

    def test_metadata(self):
        for key, plugin in get_plugin_registry().get_all_plugins().items():
            info = plugin.get_plugin_info()
            assert info.experiment_id.value == key
            assert info.default_symbols
            assert info.default_p_values
            assert info.to_dict()["checks"] == info.checks


class TestCases:
    def test_case_label(self):
        assert Case("bump(0,1)", 2.0).label == "bump(0,1) p=2"

    def test_resolve_fills_defaults(self, mock_experiment):
        config = mock_experiment.resolve(parse_config({"experiment": "E3-hs-identity"}))
        assert config.symbols == ["bump(0,1)", "zbar"]
        assert config.p_values == [1.0, 2.0]
        assert config.r == 0.5

    def test_resolve_keeps_explicit_fields(self, mock_experiment):
        config = parse_config({"experiment": "E3-hs-identity", "r": 2.0, "symbols": ["z"], "p_values": [3]})
        resolved = mock_experiment.resolve(config)
        assert resolved.r == 2.0
        assert resolved.symbols == ["z"]
        assert resolved.p_values == [3.0]

    def test_cases_are_symbol_major(self, mock_experiment):
        config = mock_experiment.resolve(parse_config({"experiment": "E3-hs-identity"}))
        labels = [c.label for c in mock_experiment.cases(config)]
        assert labels == ["bump(0,1) p=1", "bump(0,1) p=2", "zbar p=1", "zbar p=2"]


class TestChecks:
    def test_ratio_check(self):
        check = BaseExperimentPlugin.ratio_check("band", [0.5, 2.0, 4.0, None, math.inf, 0.0], 10.0)
        assert check.passed
        assert check.value == 4.0
        assert check.detail == "3 ratios"

    def test_ratio_check_fails_outside_band(self):
        check = BaseExperimentPlugin.ratio_check("band", [1.0, 0.05], 10.0)
        assert not check.passed
        assert check.value == 0.05

    def test_ratio_check_without_values(self):
        check = BaseExperimentPlugin.ratio_check("band", [None], 10.0, enforced=False)
        assert check.passed
        assert check.value is None
        assert not check.enforced

    def test_bound_check(self):
        check = BaseExperimentPlugin.bound_check("gap", [1e-9, math.nan, None, 3e-9], 1e-8)
        assert check.passed
        assert check.value == pytest.approx(3e-9)
        assert not BaseExperimentPlugin.bound_check("gap", [math.inf], 1e-8).passed
