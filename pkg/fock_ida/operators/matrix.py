"""Finite sections of operators in an orthonormal basis."""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

HERMITIAN_TOL = 1e-12


class OperatorKind(str, Enum):
    TOEPLITZ = "toeplitz"
    HANKEL_GRAM = "hankel-gram"
    COMPRESSION = "compression"


@dataclass(frozen=True)
class OperatorMatrix:
    """Matrix of an operator; rows index the codomain basis, columns the domain basis.

    ``codomain`` is ``"self"`` for square matrices acting on the order-N
    section, or ``"F2(N')"`` for compressions into a longer basis.
    """

    entries: NDArray[np.complex128]
    kind: OperatorKind
    symbol: str
    codomain: str = "self"
    hermitian: bool = False
    grid: dict[str, Any] = field(default_factory=dict)
    psd_violation: float = 0.0

    def __post_init__(self) -> None:
        if self.entries.ndim != 2:
            raise ValueError("operator entries must form a matrix")
        if self.hermitian:
            if self.entries.shape[0] != self.entries.shape[1]:
                raise ValueError("a hermitian operator matrix must be square")
            gap = float(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0))
            if gap > HERMITIAN_TOL * max(1.0, float(np.max(np.abs(self.entries), initial=0.0))):
                raise ValueError(f"matrix flagged hermitian deviates from its adjoint by {gap:.2e}")

    @property
    def N(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.entries.shape[0]), int(self.entries.shape[1]))

    def leading(self, order: int) -> "OperatorMatrix":
        """Leading principal block, i.e. the order-``order`` finite section."""
        if not 1 <= order <= min(self.shape):
            raise ValueError(f"section order must lie in [1, {min(self.shape)}], got {order}")
        return replace(self, entries=self.entries[:order, :order].copy())

    def apply(self, coefficients: ArrayLike) -> NDArray[np.complex128]:
        return np.asarray(self.entries @ np.asarray(coefficients, dtype=np.complex128), dtype=np.complex128)

    def quadratic_form(self, coefficients: ArrayLike) -> NDArray[np.complex128]:
        """<T c, c> for one vector or a stack of vectors along the last axis."""
        c = np.asarray(coefficients, dtype=np.complex128)[..., : self.N]
        return np.asarray(np.sum(np.conj(c) * (c @ self.entries.T), axis=-1), dtype=np.complex128)

    def describe(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "symbol": self.symbol,
            "shape": list(self.shape),
            "codomain": self.codomain,
            "hermitian": self.hermitian,
            "grid": self.grid,
            "psd_violation": self.psd_violation,
        }


def hermitian_part(entries: NDArray[np.complex128]) -> NDArray[np.complex128]:
    return np.asarray(0.5 * (entries + entries.conj().T), dtype=np.complex128)
