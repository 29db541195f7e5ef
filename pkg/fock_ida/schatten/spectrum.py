"""Singular values of finite sections and Schatten p-(quasi)norms."""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import TruncationError
from fock_ida.core.models import NormEstimate
from fock_ida.operators.hankel import PSD_TOL, zero_band
from fock_ida.operators.matrix import OperatorMatrix

logger = logging.getLogger(__name__)

SECTION_STEP = 10
SPECTRAL_TAIL = 1e-2


def _gram_singular_values(entries: NDArray[np.complex128], psd_tol: float) -> tuple[NDArray[np.float64], int]:
    eigenvalues = np.linalg.eigvalsh(entries)
    band = zero_band(eigenvalues, psd_tol)
    if eigenvalues.size and eigenvalues[0] < -band:
        raise TruncationError(
            f"gram eigenvalue {eigenvalues[0]:.3e} is below -{band:.1e}; enlarge N or the codomain padding",
            magnitude=float(-eigenvalues[0]),
        )
    clamped = int(np.sum((eigenvalues < 0) & (eigenvalues >= -band)))
    cleaned = np.where(np.abs(eigenvalues) <= band, 0.0, eigenvalues)
    return np.sort(np.sqrt(cleaned))[::-1].copy(), clamped


def power_sum_norm(values: ArrayLike, p: float) -> float:
    """(sum s^p)^{1/p}, the maximum for p = inf."""
    s = np.asarray(values, dtype=np.float64)
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    if math.isinf(p):
        return float(np.max(s, initial=0.0))
    if not np.any(s > 0):
        return 0.0
    top = float(np.max(s))
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


@dataclass
class SpectralReport:
    """Sorted singular values at order N, with those of the N - 10 section for convergence deltas."""

    singular_values: NDArray[np.float64]
    N: int
    reference: NDArray[np.float64] | None = None
    clamped: int = 0
    spectral_tail: float = SPECTRAL_TAIL
    norms: dict[float, NormEstimate] = field(default_factory=dict)

    def __post_init__(self) -> None:
        s = self.singular_values
        if np.any(s < 0) or np.any(np.diff(s) > 0):
            raise ValueError("singular values must be non-negative and non-increasing")

    @property
    def tail_ratio(self) -> float:
        """s_{N-11} / s_0, the spectral divergence proxy."""
        s = self.singular_values
        index = self.N - SECTION_STEP - 1
        if s.size == 0 or s[0] == 0.0 or index < 0 or index >= s.size:
            return 0.0
        return float(s[index] / s[0])

    @property
    def divergent(self) -> bool:
        return self.tail_ratio > self.spectral_tail

    def norm(self, p: float) -> NormEstimate:
        if p not in self.norms:
            self.norms[p] = schatten_norm(self, p)
        return self.norms[p]

    def delta(self, p: float) -> float:
        """Relative change of the S_p value from order N - 10 to order N."""
        if self.reference is None:
            return float("nan")
        current = power_sum_norm(self.singular_values, p)
        previous = power_sum_norm(self.reference, p)
        if current == 0.0:
            return 0.0 if previous == 0.0 else float("inf")
        return abs(current - previous) / current

    def to_dict(self, p_values: Iterable[float] = ()) -> dict[str, Any]:
        return {
            "N": self.N,
            "singular_values": self.singular_values.tolist(),
            "clamped": self.clamped,
            "tail_ratio": self.tail_ratio,
            "divergent": self.divergent,
            "norms": {str(p): self.norm(p).to_dict() for p in p_values},
            "deltas": {str(p): self.delta(p) for p in p_values},
        }


def singular_values(
    gram: OperatorMatrix | ArrayLike,
    psd_tol: float = PSD_TOL,
    spectral_tail: float = SPECTRAL_TAIL,
    section_step: int = SECTION_STEP,
) -> SpectralReport:
    """s_j = sqrt(eigenvalues of H^*H), sorted descending.

    Eigenvalues inside the zero band become exact zeros; anything more
    negative raises ``TruncationError``.
    """
    entries = gram.entries if isinstance(gram, OperatorMatrix) else np.asarray(gram, dtype=np.complex128)
    s, clamped = _gram_singular_values(entries, psd_tol)
    order = int(entries.shape[0])
    reference = None
    if order - section_step >= 1:
        reference, _ = _gram_singular_values(entries[: order - section_step, : order - section_step], psd_tol)
    if clamped:
        logger.debug(f"clamped {clamped} small negative eigenvalues at N={order}")
    return SpectralReport(
        singular_values=s, N=order, reference=reference, clamped=clamped, spectral_tail=spectral_tail
    )


def schatten_norm(report: SpectralReport | ArrayLike, p: float) -> NormEstimate:
    """||T||_{S_p}; flagged divergent when the spectrum does not decay (never for p = inf)."""
    if isinstance(report, SpectralReport):
        value = power_sum_norm(report.singular_values, p)
        divergent = report.divergent and not math.isinf(p)
        return NormEstimate(value=value, divergent=divergent, tail=report.tail_ratio, detail="spectral")
    return NormEstimate(value=power_sum_norm(report, p), detail="spectral")


def positive_spectrum(operator: OperatorMatrix, psd_tol: float = PSD_TOL) -> SpectralReport:
    """Singular values of a positive operator are its eigenvalues."""
    if not operator.hermitian:
        raise ValueError(f"{operator.symbol}: positive spectrum needs a hermitian matrix")
    eigenvalues = np.linalg.eigvalsh(operator.entries)
    band = zero_band(eigenvalues, psd_tol)
    if eigenvalues.size and eigenvalues[0] < -band:
        raise TruncationError(
            f"{operator.symbol} is not positive: eigenvalue {eigenvalues[0]:.3e}", magnitude=float(-eigenvalues[0])
        )
    values = np.sort(np.where(eigenvalues <= band, 0.0, eigenvalues))[::-1].copy()
    order = operator.N
    reference = None
    if order - SECTION_STEP >= 1:
        head = np.linalg.eigvalsh(operator.entries[: order - SECTION_STEP, : order - SECTION_STEP])
        reference = np.sort(np.maximum(head, 0.0))[::-1].copy()
    return SpectralReport(singular_values=values, N=order, reference=reference)
