"""Weighted L^p(phi) norms by quadrature."""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import InsufficientGridError
from fock_ida.space.quadrature import GridDomain, QuadratureGrid
from fock_ida.space.weights import Weight

DEFAULT_TAIL_TOL = 1e-10


def weighted_norm(
    f: Callable[[NDArray[np.complex128]], ArrayLike] | ArrayLike,
    p: float,
    weight: Weight,
    grid: QuadratureGrid,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> float:
    """(int |f|^p e^{-p phi} dv)^{1/p}; the sup of |f e^{-phi}| over nodes for p = inf.

    ``f`` is a callable or its values at the grid nodes. On plane grids the
    share of the integral carried by the outer unit band is the tail
    estimate; above ``tail_tol`` the grid is rejected.
    """
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    values = f(grid.nodes) if callable(f) else f
    magnitude = np.abs(np.asarray(values)) * np.exp(-weight.phi(grid.nodes))
    if np.isinf(p):
        return float(np.max(magnitude, initial=0.0))
    integrand = magnitude**p
    total = float(grid.integrate(integrand))
    if total == 0.0:
        return 0.0
    if grid.domain == GridDomain.PLANE:
        band = grid.outer_band(1.0)
        tail = float(np.sum(integrand[band] * grid.weights[band])) / total
        if tail > tail_tol:
            raise InsufficientGridError(
                f"outer band carries {tail:.2e} of the L^{p:g} mass on a radius-{grid.radius:g} grid", tail=tail
            )
    return float(total ** (1.0 / p))
