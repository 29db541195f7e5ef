"""Reproducing kernels of the truncated space and their diagnostics."""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import TruncationError
from fock_ida.space.basis import Basis
from fock_ida.space.quadrature import ball_grid

logger = logging.getLogger(__name__)

VALIDATION_TOL = 1e-12


def _check_radius(basis: Basis, *points: ArrayLike) -> None:
    limit = basis.validated_radius(VALIDATION_TOL)
    for pts in points:
        worst = float(np.max(np.abs(np.asarray(pts)), initial=0.0))
        if worst > limit:
            raise TruncationError(
                f"|z| = {worst:.3g} exceeds the validated radius {limit:.3g} of an order-{basis.N} basis",
                magnitude=worst,
            )


def weighted_kernel(basis: Basis, z: ArrayLike, w: ArrayLike) -> NDArray[np.complex128]:
    """K_N(z, w) e^{-phi(z) - phi(w)} without any radius check."""
    ez = basis.weighted_values(z)
    ew = basis.weighted_values(w)
    return np.asarray(np.sum(ez * np.conj(ew), axis=-1), dtype=np.complex128)


def kernel_eval(basis: Basis, z: ArrayLike, w: ArrayLike, check: bool = True) -> NDArray[np.complex128]:
    """K_N(z, w) = sum_k e_k(z) conj(e_k(w))."""
    if check:
        _check_radius(basis, z, w)
    scale = np.exp(basis.weight.phi(z) + basis.weight.phi(w))
    return np.asarray(scale * weighted_kernel(basis, z, w), dtype=np.complex128)


def kernel_coefficients(basis: Basis, z: ArrayLike) -> NDArray[np.complex128]:
    """Coefficients of k_z = K_N(., z)/sqrt(K_N(z, z)), shape z.shape + (N,).

    The e^{phi(z)} factors cancel, so this is stable far outside the
    validated radius; there it describes the compressed kernel vector.
    """
    ez = basis.weighted_values(z)
    norm = np.sqrt(np.sum(np.abs(ez) ** 2, axis=-1))
    if np.any(norm <= 0.0):
        raise TruncationError("K_N(z, z) vanishes at some probe point", magnitude=0.0)
    return np.asarray(np.conj(ez) / norm[..., None], dtype=np.complex128)


def normalized_kernel(basis: Basis, z: complex) -> NDArray[np.complex128]:
    """Coefficient vector of k_z in the basis; unit norm by construction."""
    _check_radius(basis, z)
    return kernel_coefficients(basis, complex(z))


@dataclass
class KernelDecayReport:
    theta: float
    C: float
    lower_const: float
    r0: float
    diagonal_min: float
    diagonal_max: float
    violations: int
    pairs: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta": self.theta,
            "C": self.C,
            "lower_const": self.lower_const,
            "r0": self.r0,
            "diagonal_min": self.diagonal_min,
            "diagonal_max": self.diagonal_max,
            "violations": self.violations,
            "pairs": self.pairs,
        }


def kernel_decay_diagnostic(basis: Basis, z: ArrayLike, w: ArrayLike, r0: float = 0.5) -> KernelDecayReport:
    """Fit |K(z,w)| <= C e^{phi(z)+phi(w)} e^{-theta|z-w|} and the near-diagonal lower constant.

    theta is fitted on the even-indexed pairs; ``violations`` counts odd-indexed
    pairs above that bound. The reported C covers every pair.
    """
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    ww = np.atleast_1d(np.asarray(w, dtype=np.complex128))
    _check_radius(basis, zz, ww)
    q = np.abs(weighted_kernel(basis, zz, ww))
    dist = np.abs(zz - ww)

    fit_q, fit_d = q[::2], dist[::2]
    if fit_d.size >= 2 and np.ptp(fit_d) > 0:
        slope = float(np.polyfit(fit_d, np.log(fit_q), 1)[0])
    else:
        slope = 0.0
    theta = max(-slope, 0.0)
    fit_C = float(np.max(fit_q * np.exp(theta * fit_d)))
    held_out = q[1::2] * np.exp(theta * dist[1::2])
    violations = int(np.sum(held_out > fit_C * (1.0 + 1e-12)))
    C = float(np.max(q * np.exp(theta * dist)))

    near = dist <= r0
    lower = float(np.min(q[near])) if np.any(near) else float("nan")
    diagonal = np.abs(weighted_kernel(basis, zz, zz))
    report = KernelDecayReport(
        theta=theta,
        C=C,
        lower_const=lower,
        r0=r0,
        diagonal_min=float(diagonal.min()),
        diagonal_max=float(diagonal.max()),
        violations=violations,
        pairs=int(zz.size),
    )
    logger.debug(f"kernel decay: {report.to_dict()}")
    return report


def submean_constant(basis: Basis, coefficients: ArrayLike, z: complex, r: float) -> float:
    """|f(z) e^{-phi(z)}|^2 / int_{B(z,r)} |f e^{-phi}|^2 dv for f = sum c_k e_k."""
    c = np.asarray(coefficients, dtype=np.complex128)
    point = complex(np.dot(basis.weighted_values(complex(z)), c))
    grid = ball_grid(complex(z), r)
    local = grid.integrate(np.abs(basis.weighted_values(grid.nodes) @ c) ** 2)
    return float(abs(point) ** 2 / float(np.real(local)))
