"""Uniform periodic grids on [-L, L)^2 for spectral calculus."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import PeriodizationError

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class PlaneGrid:
    """n x n points x_j = -L + j h, h = 2L/n; the first axis is x, the second y."""

    n: int = 512
    half_width: float = 8.0

    def __post_init__(self) -> None:
        if self.n < 2 or self.n & (self.n - 1):
            raise ValueError(f"grid size must be a power of two, got {self.n}")
        if self.half_width <= 0:
            raise ValueError("half width must be positive")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.n

    @property
    def cell_area(self) -> float:
        return self.spacing**2

    @cached_property
    def z(self) -> NDArray[np.complex128]:
        axis = -self.half_width + self.spacing * np.arange(self.n)
        xs, ys = np.meshgrid(axis, axis, indexing="ij")
        return np.asarray(xs + 1j * ys, dtype=np.complex128)

    @cached_property
    def frequencies(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        k = 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)
        kx, ky = np.meshgrid(k, k, indexing="ij")
        return kx, ky

    def sample(self, f: object) -> NDArray[np.complex128]:
        return np.asarray(f(self.z), dtype=np.complex128)  # type: ignore[operator]

    def boundary_max(self, values: ArrayLike, offset: complex = 0j) -> float:
        """Largest |values - offset| on the outermost rows and columns."""
        v = np.asarray(values) - offset
        edges = np.concatenate([v[0, :], v[-1, :], v[:, 0], v[:, -1]])
        return float(np.max(np.abs(edges)))

    def check_periodic(self, values: ArrayLike, tol: float = BOUNDARY_TOL, offset: complex = 0j) -> None:
        boundary = self.boundary_max(values, offset)
        if boundary > tol:
            raise PeriodizationError(
                f"field reaches {boundary:.2e} on the boundary of [-{self.half_width:g}, {self.half_width:g})^2",
                boundary=boundary,
            )

    def lp_norm(self, values: ArrayLike, p: float) -> float:
        v = np.abs(np.asarray(values))
        if np.isinf(p):
            return float(np.max(v))
        return float((np.sum(v**p) * self.cell_area) ** (1.0 / p))
