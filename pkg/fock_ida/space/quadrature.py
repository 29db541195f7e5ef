"""Quadrature grids on the plane, on balls, on squares and for the Gaussian measure."""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from numpy.typing import ArrayLike, NDArray

if TYPE_CHECKING:
    from fock_ida.space.symbols import Symbol
    from fock_ida.space.weights import Weight

PLANE_PANEL_WIDTH = 1.0
PLANE_NODES_PER_PANEL = 20
PLANE_MIN_ANGULAR = 192
BALL_RADIAL = 32
BALL_ANGULAR = 64
SUPPORT_RADIAL = 48
SQUARE_NODES = 24
HERMITE_NODES = 40


class GridDomain(str, Enum):
    PLANE = "plane"
    BALL = "ball"
    SQUARE = "square"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes and strictly positive weights.

    For ``PLANE`` and ``BALL`` grids the weights integrate against area
    measure on the disk of ``radius`` around ``center``. ``GAUSSIAN`` grids
    integrate against the probability measure pi^{-1} e^{-|z|^2} dv.
    """

    nodes: NDArray[np.complex128]
    weights: NDArray[np.float64]
    domain: GridDomain
    center: complex = 0j
    radius: float = 0.0

    def __post_init__(self) -> None:
        if self.nodes.shape != self.weights.shape:
            raise ValueError("nodes and weights must have the same shape")
        if not np.all(self.weights > 0):
            raise ValueError("quadrature weights must be strictly positive")

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @property
    def radii(self) -> NDArray[np.float64]:
        return np.asarray(np.abs(self.nodes - self.center), dtype=np.float64)

    def integrate(self, values: ArrayLike) -> Any:
        return np.sum(np.asarray(values) * self.weights, axis=-1)

    def outer_band(self, width: float = 1.0) -> NDArray[np.bool_]:
        return np.asarray(self.radii >= self.radius - width)

    def describe(self) -> dict[str, Any]:
        return {
            "domain": self.domain.value,
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
            "nodes": self.size,
        }


def _composite_legendre(breaks: list[float], per_panel: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    x, w = leggauss(per_panel)
    nodes, weights = [], []
    for a, b in zip(breaks[:-1], breaks[1:], strict=True):
        if b <= a:
            continue
        half = 0.5 * (b - a)
        nodes.append(a + half * (x + 1.0))
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _polar(
    center: complex, rho: NDArray[np.float64], w_rho: NDArray[np.float64], n_angular: int
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    nodes = center + np.outer(rho, np.exp(1j * theta))
    weights = np.outer(rho * w_rho, np.full(n_angular, 2.0 * np.pi / n_angular))
    return nodes.ravel().astype(np.complex128), weights.ravel()


def plane_grid(
    radius: float,
    n_angular: int = PLANE_MIN_ANGULAR,
    panel_width: float = PLANE_PANEL_WIDTH,
    nodes_per_panel: int = PLANE_NODES_PER_PANEL,
    center: complex = 0j,
) -> QuadratureGrid:
    """Polar grid on |z - center| <= radius: composite Gauss-Legendre radial panels, uniform angles."""
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    breaks = list(np.arange(0.0, radius, panel_width)) + [radius]
    rho, w_rho = _composite_legendre(breaks, nodes_per_panel)
    nodes, weights = _polar(complex(center), rho, w_rho, n_angular)
    return QuadratureGrid(nodes, weights, GridDomain.PLANE, complex(center), float(radius))


def ball_grid(
    center: complex,
    r: float,
    n_radial: int = BALL_RADIAL,
    n_angular: int = BALL_ANGULAR,
    breaks: tuple[float, ...] = (),
) -> QuadratureGrid:
    """Gauss-Legendre radial x uniform angular rule on B(center, r).

    ``breaks`` are radii inside (0, r) where the integrand is not smooth;
    each radial panel gets ``n_radial`` nodes.
    """
    if r <= 0:
        raise ValueError(f"ball radius must be positive, got {r}")
    inner = sorted(b for b in breaks if 0.0 < b < r)
    rho, w_rho = _composite_legendre([0.0, *inner, r], n_radial)
    nodes, weights = _polar(complex(center), rho, w_rho, n_angular)
    return QuadratureGrid(nodes, weights, GridDomain.BALL, complex(center), float(r))


def unit_disk_rule(
    n_radial: int = BALL_RADIAL, n_angular: int = BALL_ANGULAR
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """Nodes on the unit disk with weights summing to one (ball averages)."""
    grid = ball_grid(0j, 1.0, n_radial, n_angular)
    return grid.nodes, grid.weights / np.pi


def square_grid(lower_left: complex, side: float, n: int = SQUARE_NODES) -> QuadratureGrid:
    """Tensor Gauss-Legendre rule on the square [a, a+side] x [b, b+side]."""
    x, w = leggauss(n)
    t = 0.5 * side * (x + 1.0)
    wt = 0.5 * side * w
    xs, ys = np.meshgrid(lower_left.real + t, lower_left.imag + t, indexing="ij")
    weights = np.outer(wt, wt)
    center = complex(lower_left) + 0.5 * side * (1 + 1j)
    return QuadratureGrid(
        (xs + 1j * ys).ravel(), weights.ravel(), GridDomain.SQUARE, center, float(side / np.sqrt(2.0))
    )


def gaussian_grid(n: int = HERMITE_NODES) -> QuadratureGrid:
    """Tensor Gauss-Hermite rule for the probability measure pi^{-1} e^{-|z|^2} dv."""
    x, w = hermgauss(n)
    xs, ys = np.meshgrid(x, x, indexing="ij")
    weights = np.outer(w, w) / np.pi
    return QuadratureGrid((xs + 1j * ys).ravel(), weights.ravel(), GridDomain.GAUSSIAN, 0j, float(np.max(x)))


def grid_for_symbol(symbol: "Symbol", weight: "Weight", order: int) -> QuadratureGrid:
    """Grid adapted to integrands f(w) e_j(w) conj(e_k(w)) e^{-2 phi(w)} with j, k < order.

    Compactly supported symbols get a ball grid around their support, with
    radial panels split at the symbol's non-smooth radii. Other symbols get
    a plane grid wide enough for the highest basis function.
    """
    angular = 2 * order + 2 + 2 * symbol.degree
    if symbol.support_radius is not None:
        return ball_grid(
            symbol.support_center,
            symbol.support_radius,
            n_radial=SUPPORT_RADIAL,
            n_angular=max(BALL_ANGULAR, angular),
            breaks=symbol.breaks,
        )
    radius = weight.effective_radius(order + symbol.degree)
    return plane_grid(np.ceil(radius), n_angular=max(PLANE_MIN_ANGULAR, angular))


def basis_grid(weight: "Weight", order: int) -> QuadratureGrid:
    """Plane grid on which an order-``order`` basis is exactly orthonormal to quadrature accuracy."""
    radius = weight.effective_radius(order)
    return plane_grid(np.ceil(radius), n_angular=max(PLANE_MIN_ANGULAR, 2 * order + 2))
