"""Statistical aggregation of empirical constants across experiment rows."""

import math
from collections.abc import Iterable

import numpy as np

from fock_ida.core.models import CaseResult, CaseStatus


def aggregate_values(values: Iterable[float | None]) -> dict[str, float | int | None]:
    """Count, mean, median, std_dev, min and max of the finite values.

    None, NaN and infinities are skipped.
    """
    finite = np.array([v for v in values if v is not None and math.isfinite(v)], dtype=np.float64)
    if finite.size == 0:
        return {"count": 0, "mean": None, "median": None, "std_dev": None, "min": None, "max": None}
    return {
        "count": int(finite.size),
        "mean": float(np.mean(finite)),
        "median": float(np.median(finite)),
        "std_dev": float(np.std(finite, ddof=1)) if finite.size > 1 else 0.0,
        "min": float(np.min(finite)),
        "max": float(np.max(finite)),
    }


def column_values(rows: list[CaseResult], column: str) -> list[float | None]:
    out: list[float | None] = []
    for row in rows:
        if row.status != CaseStatus.COMPLETED:
            continue
        value = row.values.get(column)
        out.append(float(value) if isinstance(value, int | float) and not isinstance(value, bool) else None)
    return out


def values_by_symbol(rows: list[CaseResult], column: str) -> dict[str, dict[str, float | int | None]]:
    """Group rows by symbol and aggregate one column for each group."""
    groups: dict[str, list[CaseResult]] = {}
    for row in rows:
        groups.setdefault(row.symbol, []).append(row)
    return {symbol: aggregate_values(column_values(items, column)) for symbol, items in groups.items()}


def summarize_columns(rows: list[CaseResult], columns: Iterable[str]) -> dict[str, dict[str, float | int | None]]:
    """Aggregate each named column over all completed rows; absent columns are left out."""
    out = {}
    for column in columns:
        stats = aggregate_values(column_values(rows, column))
        if stats["count"]:
            out[column] = stats
    return out


def percentile(values: list[float], p: float) -> float:
    """The p-th percentile (0-100) with linear interpolation."""
    if not values:
        return 0.0
    return float(np.percentile(np.asarray(values, dtype=np.float64), p))
