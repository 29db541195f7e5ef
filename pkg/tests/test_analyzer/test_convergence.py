"""Tests for convergence deltas."""

import math

import pytest

from fock_ida.analyzer.convergence import (
    convergence_check,
    over_tolerance,
    ratio_drifts,
    rejected_rows,
    relative_drift,
)
from fock_ida.core.models import CaseResult, CaseStatus


class TestRelativeDrift:
    def test_values(self):
        assert relative_drift(2.0, 1.5) == pytest.approx(0.25)
        assert relative_drift(0.0, 0.0) == 0.0
        assert relative_drift(0.0, 1.0) == math.inf

    def test_undefined(self):
        assert relative_drift(None, 1.0) is None
        assert relative_drift(1.0, math.nan) is None
        assert relative_drift(math.inf, 1.0) is None

    def test_ratio_drifts(self):
        drifts = ratio_drifts({"a/b": 2.0, "a/c": None}, {"a/b": 1.0})
        assert drifts == {"delta_ratio_a/b": 0.5, "delta_ratio_a/c": None}


class TestConvergenceCheck:
    def test_divergent_quantities_are_skipped(self, sample_rows):
        offenders = over_tolerance(sample_rows, 0.2)
        assert [(r.symbol, k, d) for r, k, d in offenders] == [("cbump(0,1,1)", "delta_schatten", 0.5)]

    def test_check_fails_on_offenders(self, sample_rows):
        check = convergence_check(sample_rows, 0.2)
        assert check.name == "n-convergence"
        assert not check.passed
        assert check.value == 0.5
        assert check.detail == "cbump(0,1,1) p=4 delta_schatten=0.5"

    def test_check_reports_worst_delta_when_passing(self, sample_rows):
        check = convergence_check(sample_rows, 0.6)
        assert check.passed
        assert check.value == 0.9
        assert check.detail == "all deltas within tolerance"

    def test_failed_rows_and_nan_deltas_are_ignored(self):
        rows = [
            CaseResult("E1", "a", 1.0, status=CaseStatus.FAILED, values={"delta_x": 5.0}),
            CaseResult("E1", "b", 1.0, values={"delta_x": math.nan, "delta_y": None}),
        ]
        assert over_tolerance(rows, 0.1) == []
        assert convergence_check(rows, 0.1).passed

    def test_rejected_rows(self, sample_rows):
        assert rejected_rows(sample_rows, 0.2) == [
            {"symbol": "cbump(0,1,1)", "p": 4.0, "column": "delta_schatten", "delta": 0.5}
        ]
