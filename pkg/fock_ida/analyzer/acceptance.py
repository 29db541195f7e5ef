"""Acceptance outcomes and CI exit codes."""

from fock_ida.core.models import AcceptanceCheck, RunResult

EXIT_OK = 0
EXIT_ACCEPTANCE = 1
EXIT_USAGE = 2


def failed_checks(checks: list[AcceptanceCheck]) -> list[AcceptanceCheck]:
    """Enforced checks that did not pass."""
    return [c for c in checks if c.enforced and not c.passed]


def summarize_checks(checks: list[AcceptanceCheck]) -> dict[str, int]:
    enforced = [c for c in checks if c.enforced]
    return {
        "total": len(checks),
        "enforced": len(enforced),
        "passed": sum(1 for c in enforced if c.passed),
        "failed": len(failed_checks(checks)),
        "informational": len(checks) - len(enforced),
    }


def ci_exit_code(results: RunResult | list[RunResult], extra_checks: list[AcceptanceCheck] | None = None) -> int:
    """Return CI-appropriate exit code for one or more runs.

    Exit codes:
        0 - every enforced check passed and no case failed
        1 - numerical acceptance failure
    Usage errors (exit 2) are raised before any run starts.
    """
    runs = [results] if isinstance(results, RunResult) else results
    if any(not run.passed for run in runs):
        return EXIT_ACCEPTANCE
    if failed_checks(extra_checks or []):
        return EXIT_ACCEPTANCE
    return EXIT_OK
