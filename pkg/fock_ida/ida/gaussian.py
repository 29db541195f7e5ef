"""Gaussian standard deviation SD of translates and the cube functional J(f; u)."""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.models import FieldKind, NormEstimate
from fock_ida.ida.fields import CHUNK, OscillationField, field_norm
from fock_ida.space.quadrature import gaussian_grid, square_grid

SymbolLike = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]

CUBE_LOWER = -1.0 - 1.0j
CUBE_SIDE = 3.0


def _deviation(values: NDArray[np.complex128], weights: NDArray[np.float64]) -> NDArray[np.float64]:
    second = np.abs(values) ** 2 @ weights
    first = values @ weights
    return np.asarray(np.sqrt(np.maximum(second - np.abs(first) ** 2, 0.0)), dtype=np.float64)


def sd(g: SymbolLike) -> float:
    """(int |g|^2 dmu - |int g dmu|^2)^{1/2} for dmu = pi^{-1} e^{-|z|^2} dv."""
    grid = gaussian_grid()
    values = np.asarray(g(grid.nodes), dtype=np.complex128)
    return float(_deviation(values[None, :], grid.weights)[0])


def sd_field(
    f: SymbolLike, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> OscillationField:
    """z -> SD(f o tau_z) with tau_z(w) = w + z."""
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    grid = gaussian_grid()
    values = np.empty(cs.size)
    for start in range(0, cs.size, CHUNK):
        block = cs[start : start + CHUNK]
        samples = np.asarray(f(block[:, None] + grid.nodes[None, :]), dtype=np.complex128)
        values[start : start + CHUNK] = _deviation(samples, grid.weights)
    ws = np.ones(cs.size) if weights is None else np.asarray(weights, dtype=np.float64)
    rad = float(np.max(np.abs(cs), initial=0.0)) if radius is None else float(radius)
    return OscillationField(cs, values, ws, FieldKind.SD, rad)


def sd_integral(
    f: SymbolLike, p: float, centers: ArrayLike, weights: ArrayLike, radius: float, tail_tol: float = 1e-3
) -> NormEstimate:
    """(int SD(f o tau_z)^p dv(z))^{1/p} or a divergence flag."""
    return field_norm(sd_field(f, centers, weights, radius), p, tail_tol)


def j_functional(f: SymbolLike, u: complex) -> float:
    """(double integral over (Q+u)^2 of |f(z) - f(w)|^2)^{1/2}, Q = [-1, 2)^2.

    Expanding the square gives 2 |Q| int |f|^2 - 2 |int f|^2.
    """
    if complex(u) != complex(round(complex(u).real), round(complex(u).imag)):
        raise ValueError(f"u must be an integer lattice point, got {u}")
    grid = square_grid(CUBE_LOWER + complex(u), CUBE_SIDE)
    values = np.asarray(f(grid.nodes), dtype=np.complex128)
    area = CUBE_SIDE**2
    total = 2.0 * area * float(grid.integrate(np.abs(values) ** 2)) - 2.0 * abs(complex(grid.integrate(values))) ** 2
    return float(np.sqrt(max(total, 0.0)))


def j_field(f: SymbolLike, radius: float) -> OscillationField:
    """J(f; u) for integer points u with |u| <= radius; unit weights make field norms lattice sums."""
    n = int(np.floor(radius))
    axis = np.arange(-n, n + 1)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    points = (xs + 1j * ys).ravel()
    points = points[np.abs(points) <= radius]
    values = np.array([j_functional(f, u) for u in points])
    return OscillationField(points.astype(np.complex128), values, np.ones(points.size), FieldKind.J, float(radius))


def j_sums(f: SymbolLike, p: float, radius: float, tail_tol: float = 1e-3) -> NormEstimate:
    """l^p norm of {J(f; u)} over integer points within the truncation radius."""
    return field_norm(j_field(f, radius), p, tail_tol)
