"""Positive measures, their ball averages mu-hat_r and Berezin transforms mu-tilde."""

from collections.abc import Callable
from dataclasses import dataclass, replace
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import UndefinedInputError
from fock_ida.core.models import FieldKind
from fock_ida.ida.fields import CHUNK, OscillationField
from fock_ida.space.basis import Basis
from fock_ida.space.kernel import kernel_coefficients
from fock_ida.space.quadrature import ball_grid, unit_disk_rule
from fock_ida.space.symbols import bump_profile

Density = Callable[[NDArray[np.complex128]], NDArray[np.float64]]

MEASURE_RADIAL = 64
MEASURE_ANGULAR = 128


class Measure(Protocol):
    name: str

    def quadrature(self) -> tuple[NDArray[np.complex128], NDArray[np.float64]]: ...

    def ball_mass(self, z: ArrayLike, r: float) -> NDArray[np.float64]: ...

    def scaled(self, factor: float) -> "Measure": ...


@dataclass(frozen=True)
class DensityMeasure:
    """d mu = density dv; a missing support radius means the density lives on the whole plane."""

    density: Density
    name: str
    support_center: complex = 0j
    support_radius: float | None = None

    def quadrature(self) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
        """Nodes and masses such that int g dmu = sum masses * g(nodes)."""
        if self.support_radius is None:
            raise UndefinedInputError(f"measure {self.name} has no compact support to integrate over")
        grid = ball_grid(self.support_center, self.support_radius, MEASURE_RADIAL, MEASURE_ANGULAR)
        return grid.nodes, grid.weights * np.asarray(self.density(grid.nodes), dtype=np.float64)

    def ball_mass(self, z: ArrayLike, r: float) -> NDArray[np.float64]:
        zz = np.asarray(z, dtype=np.complex128)
        u, wt = unit_disk_rule(MEASURE_RADIAL, MEASURE_ANGULAR)
        values = np.asarray(self.density(zz[..., None] + r * u), dtype=np.float64)
        return np.asarray(np.pi * r * r * (values @ wt), dtype=np.float64)

    def total_mass(self) -> float:
        _, masses = self.quadrature()
        return float(np.sum(masses))

    def scaled(self, factor: float) -> "DensityMeasure":
        density = self.density
        return replace(self, name=f"{factor:g}*{self.name}", density=lambda z: factor * density(z))


@dataclass(frozen=True)
class PointMasses:
    points: NDArray[np.complex128]
    masses: NDArray[np.float64]
    name: str = "atoms"

    def __post_init__(self) -> None:
        if self.points.shape != self.masses.shape:
            raise ValueError("points and masses must have the same shape")
        if np.any(self.masses < 0):
            raise ValueError("point masses must be non-negative")

    def quadrature(self) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
        return self.points, self.masses

    def ball_mass(self, z: ArrayLike, r: float) -> NDArray[np.float64]:
        """mu(B(z, r)) for the open ball."""
        zz = np.asarray(z, dtype=np.complex128)
        inside = np.abs(zz[..., None] - self.points) < r
        return np.asarray(inside @ self.masses, dtype=np.float64)

    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    def scaled(self, factor: float) -> "PointMasses":
        return replace(self, name=f"{factor:g}*{self.name}", masses=factor * self.masses)


def lebesgue() -> DensityMeasure:
    return DensityMeasure(density=lambda z: np.ones(np.shape(z)), name="lebesgue")


def bump_density(center: complex = 0j, width: float = 1.0, height: float = 1.0) -> DensityMeasure:
    """height * b((w - center)/width) dv."""
    c = complex(center)

    def density(z: NDArray[np.complex128]) -> NDArray[np.float64]:
        return height * bump_profile(np.abs((z - c) / width) ** 2)

    label = f"{c.real:g}{c.imag:+g}j" if c.imag else f"{c.real:g}"
    return DensityMeasure(
        density=density,
        name=f"bump({label},{width:g})" if height == 1.0 else f"bump({label},{width:g},{height:g})",
        support_center=c,
        support_radius=float(width),
    )


def mu_hat(mu: Measure, r: float, z: complex) -> float:
    """mu(B(z, r))."""
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    return float(np.asarray(mu.ball_mass(np.array([complex(z)]), r))[0])


def mu_hat_field(
    mu: Measure, r: float, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> OscillationField:
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    values = np.empty(cs.size)
    for start in range(0, cs.size, CHUNK):
        values[start : start + CHUNK] = mu.ball_mass(cs[start : start + CHUNK], r)
    ws = np.ones(cs.size) if weights is None else np.asarray(weights, dtype=np.float64)
    rad = float(np.max(np.abs(cs), initial=0.0)) if radius is None else float(radius)
    return OscillationField(cs, np.maximum(values, 0.0), ws, FieldKind.MU_HAT, rad, r=r)


def berezin_measure_field(
    mu: Measure, basis: Basis, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> OscillationField:
    """mu-tilde(z) = int |k_z|^2 e^{-2 phi} dmu by direct integration against mu."""
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    nodes, masses = mu.quadrature()
    node_values = basis.weighted_values(nodes)
    values = np.empty(cs.size)
    for start in range(0, cs.size, CHUNK):
        coeffs = kernel_coefficients(basis, cs[start : start + CHUNK])
        profile = np.abs(node_values @ coeffs.T) ** 2
        values[start : start + CHUNK] = masses @ profile
    ws = np.ones(cs.size) if weights is None else np.asarray(weights, dtype=np.float64)
    rad = float(np.max(np.abs(cs), initial=0.0)) if radius is None else float(radius)
    return OscillationField(cs, np.maximum(values, 0.0), ws, FieldKind.BEREZIN, rad)


def berezin_measure(mu: Measure, basis: Basis, z: complex) -> float:
    return float(berezin_measure_field(mu, basis, [complex(z)]).values[0])
