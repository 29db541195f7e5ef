"""Tests for the experiment orchestrator."""

import pytest

from fock_ida.core.config import with_overrides
from fock_ida.core.errors import ConfigError
from fock_ida.core.models import CaseStatus
from fock_ida.core.orchestrator import ExperimentOrchestrator
from fock_ida.plugins.base import ExperimentRegistry


class TestRun:
    def test_rows_follow_case_order(self, mock_registry, mock_config):
        result = ExperimentOrchestrator(mock_registry).run(mock_config)
        assert [(r.symbol, r.p) for r in result.rows] == [
            ("bump(0,1)", 1.0),
            ("bump(0,1)", 2.0),
            ("zbar", 1.0),
            ("zbar", 2.0),
        ]
        assert [r.values["value"] for r in result.rows] == [2.0, 4.0, 2.0, 4.0]
        assert result.passed

    def test_checks(self, mock_registry, mock_config):
        result = ExperimentOrchestrator(mock_registry).run(mock_config)
        assert [c.name for c in result.checks] == ["cases-completed", "n-convergence", "mock-bound"]
        assert all(c.passed for c in result.checks)

    def test_experiment_defaults_fill_unset_fields(self, mock_registry, mock_config):
        result = ExperimentOrchestrator(mock_registry).run(mock_config)
        assert {r.values["r_used"] for r in result.rows} == {0.5}
        assert result.config["r"] == 0.5
        assert result.config["symbols"] == ["bump(0,1)", "zbar"]

    def test_explicit_fields_win(self, mock_registry, mock_config):
        config = with_overrides(mock_config, r=0.75, p_values=[3.0])
        result = ExperimentOrchestrator(mock_registry).run(config)
        assert {r.values["r_used"] for r in result.rows} == {0.75}
        assert {r.p for r in result.rows} == {3.0}

    def test_failed_case_is_recorded(self, mock_registry, mock_config):
        config = with_overrides(mock_config, symbols=["fail", "bump(0,1)"], p_values=[2.0])
        result = ExperimentOrchestrator(mock_registry).run(config)
        failed, ok = result.rows
        assert failed.status == CaseStatus.FAILED
        assert failed.error == "RuntimeError: boom"
        assert failed.values == {}
        assert ok.status == CaseStatus.COMPLETED
        assert not result.passed
        assert result.checks[0].name == "cases-completed"
        assert not result.checks[0].passed
        assert result.checks[0].detail == "fail p=2"

    def test_worker_count_does_not_change_rows(self, mock_registry, mock_config):
        orchestrator = ExperimentOrchestrator(mock_registry)
        serial = orchestrator.run(with_overrides(mock_config, workers=1))
        parallel = orchestrator.run(with_overrides(mock_config, workers=3))
        assert [r.to_dict() for r in serial.rows] == [r.to_dict() for r in parallel.rows]

    def test_environment_and_timestamps(self, mock_registry, mock_config):
        result = ExperimentOrchestrator(mock_registry).run(mock_config)
        assert "python_version" in result.environment
        assert result.started_at is not None
        assert result.completed_at is not None

    def test_unknown_experiment(self, mock_config):
        with pytest.raises(ConfigError):
            ExperimentOrchestrator(ExperimentRegistry()).run(mock_config)


class TestProgress:
    def test_listener_sees_every_case(self, mock_registry, mock_config):
        updates = []
        orchestrator = ExperimentOrchestrator(mock_registry)
        orchestrator.add_progress_listener(updates.append)
        orchestrator.run(mock_config)
        assert len(updates) == 5
        assert updates[-1].case_label == "Complete"
        assert updates[-1].message == "passed"
        assert updates[-2].percent_complete == pytest.approx(100.0)
        assert sorted(u.case_index for u in updates[:-1]) == [0, 1, 2, 3]

    def test_failing_listener_does_not_abort_the_run(self, mock_registry, mock_config):
        def broken(update):
            raise RuntimeError("listener")

        orchestrator = ExperimentOrchestrator(mock_registry)
        orchestrator.add_progress_listener(broken)
        assert orchestrator.run(mock_config).passed

    def test_remove_listener(self, mock_registry, mock_config):
        updates = []
        orchestrator = ExperimentOrchestrator(mock_registry)
        orchestrator.add_progress_listener(updates.append)
        orchestrator.remove_progress_listener(updates.append)
        orchestrator.run(mock_config)
        assert updates == []
