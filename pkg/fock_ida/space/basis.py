"""Truncated orthonormal bases of F^2(phi) for radial weights.

For a radial weight the monomials z^k are mutually orthogonal, so the basis
is e_k = z^k / ||z^k|| and only the norms need computing.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial.legendre import leggauss
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammainccinv, gammaln

from fock_ida.core.errors import QuadratureError
from fock_ida.space.quadrature import QuadratureGrid, basis_grid
from fock_ida.space.weights import Weight, WeightKind

logger = logging.getLogger(__name__)

MOMENT_TOL = 1e-13
MOMENT_NODES = 20
MAX_REFINEMENTS = 8


def standard_log_moments(alpha: float, count: int) -> NDArray[np.float64]:
    """log of int |z|^{2k} e^{-alpha |z|^2} dv = log(pi k! / alpha^{k+1})."""
    k = np.arange(count, dtype=np.float64)
    return np.asarray(np.log(np.pi) + gammaln(k + 1.0) - (k + 1.0) * np.log(alpha), dtype=np.float64)


def radial_log_moments(weight: Weight, count: int) -> NDArray[np.float64]:
    """log of int |z|^{2k} e^{-2 phi} dv for k < count.

    Perturbed weights are handled as standard moments times the expectation
    of e^{-2 psi(rho)} under the radial density rho^{2k+1} e^{-alpha rho^2},
    computed by composite Gauss-Legendre panels halved until stable.
    """
    weight.require_radial()
    std = standard_log_moments(weight.alpha, count)
    if weight.kind == WeightKind.STANDARD or weight.psi is None:
        return std

    alpha = weight.alpha
    rho_max = float(np.sqrt(gammainccinv(count, 1e-20) / alpha)) + 2.0
    k = np.arange(count, dtype=np.float64)[:, None]
    x, w = leggauss(MOMENT_NODES)

    def expectation(panels: int) -> NDArray[np.float64]:
        edges = np.linspace(0.0, rho_max, panels + 1)
        half = 0.5 * np.diff(edges)
        rho = (edges[:-1, None] + half[:, None] * (x[None, :] + 1.0)).ravel()
        w_rho = (half[:, None] * w[None, :]).ravel()
        log_density = np.log(2.0 * np.pi) + (2.0 * k + 1.0) * np.log(rho) - alpha * rho**2 - std[:, None]
        values = np.exp(log_density) * np.exp(-2.0 * weight.psi(rho))[None, :]  # type: ignore[misc]
        return np.asarray(values @ w_rho, dtype=np.float64)

    panels = max(16, int(np.ceil(2.0 * rho_max)))
    previous = expectation(panels)
    for _ in range(MAX_REFINEMENTS):
        panels *= 2
        current = expectation(panels)
        change = float(np.max(np.abs(current - previous) / np.abs(current)))
        logger.debug(f"radial moments: {panels} panels, relative change {change:.3e}")
        if change < MOMENT_TOL:
            return np.asarray(std + np.log(current), dtype=np.float64)
        previous = current
    raise QuadratureError(f"radial moments of {weight.label} did not converge", residual=change)


@dataclass(frozen=True)
class Basis:
    """Orthonormal e_k = z^k / ||z^k||, k < N, with Gram metadata."""

    weight: Weight
    N: int
    log_norms: NDArray[np.float64]
    gram_residual: float

    @property
    def coefficients(self) -> NDArray[np.float64]:
        """Coefficient of z^k in e_k (the monomial table is diagonal)."""
        return np.asarray(np.exp(-self.log_norms), dtype=np.float64)

    def weighted_values(self, z: ArrayLike) -> NDArray[np.complex128]:
        """e_k(z) e^{-phi(z)} with shape z.shape + (N,), built by a stable recursion."""
        zz = np.asarray(z, dtype=np.complex128)
        factors = np.empty(zz.shape + (self.N,), dtype=np.complex128)
        factors[..., 0] = np.exp(-self.log_norms[0] - self.weight.phi(zz))
        if self.N > 1:
            steps = np.exp(self.log_norms[:-1] - self.log_norms[1:])
            factors[..., 1:] = zz[..., None] * steps
        return np.cumprod(factors, axis=-1)

    def evaluate(self, z: ArrayLike) -> NDArray[np.complex128]:
        """e_k(z), shape z.shape + (N,)."""
        zz = np.asarray(z, dtype=np.complex128)
        return self.weighted_values(zz) * np.exp(self.weight.phi(zz))[..., None]

    def validated_radius(self, tol: float = 1e-12) -> float:
        return self.weight.validated_radius(self.N, tol)

    def truncated(self, order: int) -> "Basis":
        if not 1 <= order <= self.N:
            raise ValueError(f"order must lie in [1, {self.N}], got {order}")
        return replace(self, N=order, log_norms=self.log_norms[:order])


def gram_matrix(basis: Basis, grid: QuadratureGrid) -> NDArray[np.complex128]:
    """<e_j, e_k> by quadrature; rows index j."""
    values = basis.weighted_values(grid.nodes)
    return np.asarray(values.T @ (grid.weights[:, None] * values.conj()), dtype=np.complex128)


def build_basis(weight: Weight, N: int) -> Basis:
    """Orthonormal basis of order N with its measured Gram residual."""
    if N < 1:
        raise ValueError(f"basis order must be at least 1, got {N}")
    weight.require_radial()
    log_norms = 0.5 * radial_log_moments(weight, N)
    draft = Basis(weight=weight, N=N, log_norms=log_norms, gram_residual=float("nan"))
    gram = gram_matrix(draft, basis_grid(weight, N))
    residual = float(np.max(np.abs(gram - np.eye(N))))
    logger.info(f"basis {weight.label} N={N}: gram residual {residual:.2e}")
    return replace(draft, gram_residual=residual)
