"""Plain-text matrix dumps for debugging.

Format: ``#`` header lines carrying the operator description as JSON, then
one line per matrix row with ``re im`` pairs separated by spaces, row-major.
"""

import json
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from fock_ida.operators.matrix import OperatorMatrix


def matrix_to_text(matrix: OperatorMatrix) -> str:
    rows, cols = matrix.shape
    lines = [f"# {json.dumps(matrix.describe(), sort_keys=True, default=str)}", f"# shape {rows} {cols}"]
    for row in matrix.entries:
        lines.append(" ".join(f"{z.real:.17g} {z.imag:.17g}" for z in row))
    return "\n".join(lines) + "\n"


def read_matrix_text(text: str) -> NDArray[np.complex128]:
    """Entries of a dump written by ``matrix_to_text``."""
    shape: tuple[int, int] | None = None
    values: list[list[complex]] = []
    for line in text.splitlines():
        if line.startswith("# shape"):
            _, _, r, c = line.split()
            shape = (int(r), int(c))
        elif line and not line.startswith("#"):
            parts = [float(x) for x in line.split()]
            values.append([complex(parts[i], parts[i + 1]) for i in range(0, len(parts), 2)])
    if shape is None:
        raise ValueError("matrix dump has no shape header")
    return np.array(values, dtype=np.complex128).reshape(shape)


def write_matrix(matrix: OperatorMatrix, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(matrix_to_text(matrix), encoding="utf-8")
    return out
