"""Bergman projection onto the truncated basis."""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.space.basis import Basis
from fock_ida.space.quadrature import QuadratureGrid


def bergman_project(
    g: Callable[[NDArray[np.complex128]], ArrayLike] | ArrayLike,
    basis: Basis,
    grid: QuadratureGrid,
    weighted: bool = False,
) -> NDArray[np.complex128]:
    """Coefficients <g, e_k> for k < N.

    ``g`` is a callable or its values at the grid nodes; with ``weighted`` the
    values are taken to be g e^{-phi} already.
    """
    values = np.asarray(g(grid.nodes) if callable(g) else g, dtype=np.complex128)
    if not weighted:
        values = values * np.exp(-basis.weight.phi(grid.nodes))
    modes = basis.weighted_values(grid.nodes)
    return np.asarray((grid.weights * values) @ np.conj(modes), dtype=np.complex128)


def reconstruct(coefficients: ArrayLike, basis: Basis, z: ArrayLike) -> NDArray[np.complex128]:
    """sum_k c_k e_k(z)."""
    c = np.asarray(coefficients, dtype=np.complex128)
    return np.asarray(basis.evaluate(z)[..., : c.size] @ c, dtype=np.complex128)


def reconstruct_weighted(coefficients: ArrayLike, basis: Basis, z: ArrayLike) -> NDArray[np.complex128]:
    """sum_k c_k e_k(z) e^{-phi(z)}, safe far from the origin."""
    c = np.asarray(coefficients, dtype=np.complex128)
    return np.asarray(basis.weighted_values(z)[..., : c.size] @ c, dtype=np.complex128)


def projection_defect(coefficients: ArrayLike, basis: Basis, grid: QuadratureGrid) -> float:
    """Change in coefficients when the reconstruction is projected again."""
    c = np.asarray(coefficients, dtype=np.complex128)
    again = bergman_project(reconstruct_weighted(c, basis, grid.nodes), basis, grid, weighted=True)
    return float(np.max(np.abs(again[: c.size] - c), initial=0.0))
