"""JSON run summaries."""

import json
import math
from pathlib import Path
from typing import Any

from fock_ida.analyzer.acceptance import summarize_checks
from fock_ida.analyzer.convergence import DELTA_PREFIX, rejected_rows
from fock_ida.analyzer.statistics import summarize_columns
from fock_ida.core.models import CaseStatus, RunResult

SUMMARY_FORMAT_VERSION = "1.0"


def _json_safe(value: Any) -> Any:
    """Non-finite floats become strings so the file stays strict JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_json_safe(v) for v in value]
    return value


def _statistic_columns(result: RunResult) -> list[str]:
    """Ratio, constant and delta columns worth aggregating across rows."""
    columns: list[str] = []
    for row in result.rows:
        for key in row.values:
            wanted = "ratio" in key or key.endswith("_constant") or key.startswith(DELTA_PREFIX)
            if wanted and key not in columns:
                columns.append(key)
    return columns


def build_summary(result: RunResult) -> dict[str, Any]:
    tol = float(result.config.get("tolerances", {}).get("convergence", 0.2))
    failed_rows = [
        {"symbol": r.symbol, "p": r.p, "error": r.error} for r in result.rows if r.status != CaseStatus.COMPLETED
    ]
    summary = {
        "format_version": SUMMARY_FORMAT_VERSION,
        "experiment": result.experiment,
        "passed": result.passed,
        "check_counts": summarize_checks(result.checks),
        "checks": [c.to_dict() for c in result.checks],
        "row_count": len(result.rows),
        "failed_rows": failed_rows,
        "rejected_rows": rejected_rows(result.rows, tol),
        "statistics": summarize_columns(result.rows, _statistic_columns(result)),
        "config": result.config,
        "environment": result.environment,
        "started_at": result.started_at,
        "completed_at": result.completed_at,
    }
    return _json_safe(summary)  # type: ignore[no-any-return]


def write_summary(result: RunResult, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(build_summary(result), indent=2, default=str) + "\n", encoding="utf-8")
    return out
