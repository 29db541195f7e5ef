"""Deterministic CSV tables of experiment rows."""

import csv
import io
import math
from enum import Enum
from pathlib import Path
from typing import Any

from fock_ida.core.models import CaseResult

LEADING_COLUMNS = ("experiment", "symbol", "p", "status", "error")


def format_cell(value: Any) -> str:
    """Reals with 17 significant digits, ``true``/``false`` for flags, empty for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.17g}"
    if isinstance(value, complex):
        return f"{format_cell(value.real)}{'+' if value.imag >= 0 else '-'}{format_cell(abs(value.imag))}j"
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def table_columns(rows: list[CaseResult]) -> list[str]:
    """Fixed leading columns, then every value column in order of first appearance."""
    columns = list(LEADING_COLUMNS)
    seen = set(columns)
    for row in rows:
        for key in row.values:
            if key not in seen:
                seen.add(key)
                columns.append(key)
    return columns


def rows_to_csv(rows: list[CaseResult]) -> str:
    columns = table_columns(rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        record = row.to_dict()
        writer.writerow([format_cell(record.get(c)) for c in columns])
    return buffer.getvalue()


def write_rows_csv(rows: list[CaseResult], path: str | Path) -> Path:
    """Write the rows to ``path``; identical rows give a byte-identical file."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(rows_to_csv(rows), encoding="utf-8")
    return out
