"""Wirtinger derivatives and the Ahlfors-Beurling transform as Fourier multipliers.

With zeta = kx + i ky, d/dz has symbol i conj(zeta)/2 and d/dzbar has symbol
i zeta/2, so the transform taking dbar f to d f multiplies by conj(zeta)/zeta.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.beurling.grid import BOUNDARY_TOL, PlaneGrid

logger = logging.getLogger(__name__)

VANISHING_TOL = 1e-10


def _multipliers(grid: PlaneGrid) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    kx, ky = grid.frequencies
    return 0.5 * (1j * kx + ky), 0.5 * (1j * kx - ky)


def wirtinger(
    values: ArrayLike, grid: PlaneGrid, check: bool = True, tol: float = BOUNDARY_TOL
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """(d f, dbar f) by spectral differentiation of samples on ``grid``."""
    v = np.asarray(values, dtype=np.complex128)
    if check:
        grid.check_periodic(v, tol)
    spectrum = np.fft.fft2(v)
    d_symbol, dbar_symbol = _multipliers(grid)
    return np.fft.ifft2(d_symbol * spectrum), np.fft.ifft2(dbar_symbol * spectrum)


def beurling_multiplier(grid: PlaneGrid) -> NDArray[np.complex128]:
    kx, ky = grid.frequencies
    zeta = kx + 1j * ky
    safe = np.where(zeta == 0, 1.0, zeta)
    return np.asarray(np.where(zeta == 0, 0.0, np.conj(zeta) / safe), dtype=np.complex128)


def ahlfors_beurling(
    values: ArrayLike, grid: PlaneGrid, check: bool = True, tol: float = BOUNDARY_TOL
) -> NDArray[np.complex128]:
    """Principal-value convolution with -1/(pi z^2), via its Fourier multiplier (zero at the origin)."""
    v = np.asarray(values, dtype=np.complex128)
    if check:
        grid.check_periodic(v, tol)
    return np.asarray(np.fft.ifft2(beurling_multiplier(grid) * np.fft.fft2(v)), dtype=np.complex128)


class DerivativeStatus(str, Enum):
    OK = "ok"
    CONSTANT = "constant"
    PERIODIZATION_VIOLATION = "periodization-violation"


@dataclass
class DerivativeCheck:
    """||d f||_p / ||dbar f||_p for each requested p."""

    symbol: str
    status: DerivativeStatus
    ratios: dict[float, float | None] = field(default_factory=dict)
    d_norms: dict[float, float] = field(default_factory=dict)
    dbar_norms: dict[float, float] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "symbol": self.symbol,
            "status": self.status.value,
            "ratios": {str(p): v for p, v in self.ratios.items()},
            "d_norms": {str(p): v for p, v in self.d_norms.items()},
            "dbar_norms": {str(p): v for p, v in self.dbar_norms.items()},
        }


def derivative_lp_check(
    f: Callable[[NDArray[np.complex128]], ArrayLike], grid: PlaneGrid, p_values: list[float], name: str = "f"
) -> DerivativeCheck:
    """Compare ||d f||_{L^p} with ||dbar f||_{L^p} for a bounded C^2 symbol.

    The symbol may be constant rather than zero outside the grid: the
    constant is read off a corner and removed before differentiating.
    """
    values = grid.sample(f)
    corner = complex(values[0, 0])
    grid.check_periodic(values, offset=corner)
    d, dbar = wirtinger(values - corner, grid, check=False)
    scale = max(1.0, float(np.max(np.abs(values))))
    d_small = float(np.max(np.abs(d))) <= VANISHING_TOL * scale
    dbar_small = float(np.max(np.abs(dbar))) <= VANISHING_TOL * scale
    if dbar_small:
        status = DerivativeStatus.CONSTANT if d_small else DerivativeStatus.PERIODIZATION_VIOLATION
        if status == DerivativeStatus.PERIODIZATION_VIOLATION:
            logger.warning(f"{name}: dbar f vanishes but d f does not; the symbol is not bounded on the grid")
        return DerivativeCheck(symbol=name, status=status, ratios={p: None for p in p_values})
    check = DerivativeCheck(symbol=name, status=DerivativeStatus.OK)
    for p in p_values:
        if not 1.0 < p < np.inf:
            raise ValueError(f"p must lie in (1, inf), got {p}")
        check.d_norms[p] = grid.lp_norm(d, p)
        check.dbar_norms[p] = grid.lp_norm(dbar, p)
        check.ratios[p] = check.d_norms[p] / check.dbar_norms[p]
    return check
