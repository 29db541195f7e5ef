"""Drift of reported quantities under N - 10 and under a change of r."""

import math
from typing import Any

from fock_ida.core.models import AcceptanceCheck, CaseResult, CaseStatus

DELTA_PREFIX = "delta_"


def relative_drift(current: float | None, previous: float | None) -> float | None:
    """|current - previous| / |current|; None when either side is undefined."""
    if current is None or previous is None:
        return None
    if not (math.isfinite(current) and math.isfinite(previous)):
        return None
    if current == 0.0:
        return 0.0 if previous == 0.0 else math.inf
    return abs(current - previous) / abs(current)


def ratio_drifts(
    current: dict[str, float | None], previous: dict[str, float | None], prefix: str = DELTA_PREFIX
) -> dict[str, float | None]:
    """Drift of every ratio present on both sides, keyed ``<prefix>ratio_<name>``."""
    return {f"{prefix}ratio_{k}": relative_drift(v, previous.get(k)) for k, v in current.items()}


def _divergent(row: CaseResult, quantity: str) -> bool:
    return bool(row.values.get(f"{quantity}_divergent", False))


def over_tolerance(rows: list[CaseResult], tol: float) -> list[tuple[CaseResult, str, float]]:
    """Every (row, column, drift) whose ``delta_*`` value exceeds ``tol``.

    Deltas of quantities flagged divergent in the same row are ignored.
    """
    found = []
    for row in rows:
        if row.status != CaseStatus.COMPLETED:
            continue
        for key, value in row.values.items():
            if not key.startswith(DELTA_PREFIX) or value is None:
                continue
            if _divergent(row, key[len(DELTA_PREFIX) :]):
                continue
            if isinstance(value, float) and math.isnan(value):
                continue
            if value > tol:
                found.append((row, key, float(value)))
    return found


def convergence_check(rows: list[CaseResult], tol: float) -> AcceptanceCheck:
    """Rows whose N - 10 deltas exceed the convergence tolerance fail the run."""
    offenders = over_tolerance(rows, tol)
    worst = max((d for _, _, d in offenders), default=None)
    if worst is None:
        deltas = [
            float(v)
            for r in rows
            for k, v in r.values.items()
            if k.startswith(DELTA_PREFIX) and isinstance(v, int | float) and math.isfinite(v)
        ]
        worst = max(deltas, default=None)
    detail = "; ".join(f"{r.symbol} p={r.p:g} {k}={d:.3g}" for r, k, d in offenders[:5])
    return AcceptanceCheck(
        name="n-convergence",
        passed=not offenders,
        value=worst,
        threshold=tol,
        detail=detail or "all deltas within tolerance",
    )


def rejected_rows(rows: list[CaseResult], tol: float) -> list[dict[str, Any]]:
    """Summary records of rows rejected for excessive N - 10 drift."""
    return [{"symbol": r.symbol, "p": r.p, "column": k, "delta": d} for r, k, d in over_tolerance(rows, tol)]
