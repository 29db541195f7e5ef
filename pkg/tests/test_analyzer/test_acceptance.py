"""Tests for acceptance summaries and CI exit codes."""

from fock_ida.analyzer.acceptance import (
    EXIT_ACCEPTANCE,
    EXIT_OK,
    ci_exit_code,
    failed_checks,
    summarize_checks,
)
from fock_ida.core.models import AcceptanceCheck, CaseResult, CaseStatus, RunResult


def run(*checks: AcceptanceCheck, failed_row: bool = False) -> RunResult:
    status = CaseStatus.FAILED if failed_row else CaseStatus.COMPLETED
    return RunResult("E1", {}, rows=[CaseResult("E1", "a", 2.0, status=status)], checks=list(checks))


class TestChecks:
    def test_failed_checks_ignore_informational(self):
        checks = [AcceptanceCheck("a", False, enforced=False), AcceptanceCheck("b", False), AcceptanceCheck("c", True)]
        assert [c.name for c in failed_checks(checks)] == ["b"]
        assert summarize_checks(checks) == {"total": 3, "enforced": 2, "passed": 1, "failed": 1, "informational": 1}


class TestExitCode:
    def test_ok(self):
        assert ci_exit_code(run(AcceptanceCheck("a", True))) == EXIT_OK

    def test_failed_check(self):
        assert ci_exit_code(run(AcceptanceCheck("a", False))) == EXIT_ACCEPTANCE

    def test_failed_row(self):
        assert ci_exit_code(run(failed_row=True)) == EXIT_ACCEPTANCE

    def test_several_runs(self):
        assert ci_exit_code([run(), run(AcceptanceCheck("a", False))]) == EXIT_ACCEPTANCE
        assert ci_exit_code([run(), run()]) == EXIT_OK

    def test_extra_checks(self):
        assert ci_exit_code([run()], [AcceptanceCheck("oracle", False)]) == EXIT_ACCEPTANCE
        assert ci_exit_code([run()], [AcceptanceCheck("oracle", False, enforced=False)]) == EXIT_OK
