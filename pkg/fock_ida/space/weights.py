"""Weights phi of the space F^2(phi) and their curvature diagnostics."""

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammainccinv, gammaincinv

from fock_ida.core.errors import UnsupportedWeightError

RadialProfile = Callable[[NDArray[np.float64]], NDArray[np.float64]]
PlaneProfile = Callable[[NDArray[np.complex128]], NDArray[np.float64]]

# Radii where the finite-difference curvature of a perturbed weight is sampled.
_CURVATURE_SAMPLE_RADII = np.linspace(0.25, 12.0, 95)
_FD_STEP = 1e-3


class WeightKind(str, Enum):
    STANDARD = "standard"
    RADIAL = "radial-perturbed"
    GENERAL = "general"


@dataclass(frozen=True)
class Weight:
    """phi(z) = (alpha/2)|z|^2 + psi(|z|), or a general phi for diagnostics.

    ``m`` and ``M`` bound the Laplacian of phi. For perturbed weights they are
    sampled by finite differences on rings away from the origin.
    """

    alpha: float = 1.0
    kind: WeightKind = WeightKind.STANDARD
    psi: RadialProfile | None = None
    general_phi: PlaneProfile | None = None
    m: float = 2.0
    M: float = 2.0
    label: str = "standard"

    @classmethod
    def standard(cls, alpha: float = 1.0) -> "Weight":
        if alpha <= 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        return cls(alpha=alpha, m=2.0 * alpha, M=2.0 * alpha, label=f"standard(alpha={alpha:g})")

    @classmethod
    def radial_perturbed(cls, alpha: float, psi: RadialProfile, label: str = "radial") -> "Weight":
        draft = cls(alpha=alpha, kind=WeightKind.RADIAL, psi=psi, label=label)
        z = _CURVATURE_SAMPLE_RADII.astype(np.complex128)
        lap = draft.laplacian(z)
        m, M = float(lap.min()), float(lap.max())
        if m <= 0:
            raise UnsupportedWeightError(f"weight {label} is not strictly subharmonic (min laplacian {m:.3g})")
        return cls(alpha=alpha, kind=WeightKind.RADIAL, psi=psi, m=m, M=M, label=label)

    @classmethod
    def sinusoidal(cls, alpha: float, amplitude: float, frequency: float) -> "Weight":
        def psi(rho: NDArray[np.float64]) -> NDArray[np.float64]:
            return amplitude * np.sin(frequency * rho)

        return cls.radial_perturbed(alpha, psi, label=f"alpha={alpha:g}+{amplitude:g}*sin({frequency:g}|z|)")

    @classmethod
    def general(cls, phi: PlaneProfile, m: float, M: float, label: str = "general") -> "Weight":
        return cls(alpha=m / 2.0, kind=WeightKind.GENERAL, general_phi=phi, m=m, M=M, label=label)

    @property
    def is_radial(self) -> bool:
        return self.kind != WeightKind.GENERAL

    @property
    def has_closed_form_kernel(self) -> bool:
        return self.kind == WeightKind.STANDARD

    def require_radial(self) -> None:
        if not self.is_radial:
            raise UnsupportedWeightError(f"weight {self.label} is not radial; monomials are not orthogonal")

    def phi(self, z: ArrayLike) -> NDArray[np.float64]:
        zz = np.asarray(z, dtype=np.complex128)
        if self.general_phi is not None:
            return np.asarray(self.general_phi(zz), dtype=np.float64)
        rho = np.abs(zz)
        value = 0.5 * self.alpha * rho**2
        if self.psi is not None:
            value = value + self.psi(rho)
        return np.asarray(value, dtype=np.float64)

    def radial_phi(self, rho: ArrayLike) -> NDArray[np.float64]:
        return self.phi(np.asarray(rho, dtype=np.float64).astype(np.complex128))

    def laplacian(self, z: ArrayLike, h: float = _FD_STEP) -> NDArray[np.float64]:
        """Five-point finite-difference Laplacian of phi."""
        zz = np.asarray(z, dtype=np.complex128)
        total = self.phi(zz + h) + self.phi(zz - h) + self.phi(zz + 1j * h) + self.phi(zz - 1j * h)
        return np.asarray((total - 4.0 * self.phi(zz)) / h**2, dtype=np.float64)

    def curvature_violations(self, z: ArrayLike, slack: float = 1e-6) -> NDArray[np.complex128]:
        """Sample points where the Laplacian leaves [m, M]."""
        zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        lap = self.laplacian(zz)
        bad = (lap < self.m - slack * max(1.0, self.m)) | (lap > self.M + slack * max(1.0, self.M))
        return zz[bad]

    def psi_sup(self) -> float:
        if self.psi is None:
            return 0.0
        rho = np.linspace(0.0, 40.0, 4001)
        return float(np.max(np.abs(self.psi(rho))))

    def effective_radius(self, degree: int, tol: float = 1e-14) -> float:
        """Radius beyond which |z^degree|^2 e^{-2 phi} carries relative mass below ``tol``."""
        scaled_tol = tol * float(np.exp(-4.0 * self.psi_sup()))
        x = float(gammainccinv(degree + 1, scaled_tol))
        return float(np.sqrt(x / self.alpha)) + (1.0 if self.psi is not None else 0.0)

    def validated_radius(self, order: int, tol: float = 1e-12) -> float:
        """Radius within which an order-``order`` kernel truncation loses relative mass below ``tol``."""
        x = float(gammaincinv(order, tol))
        return float(np.sqrt(x / self.alpha))

    def closed_form_kernel(self, z: ArrayLike, w: ArrayLike) -> NDArray[np.complex128]:
        """K(z, w) = (alpha/pi) exp(alpha z conj(w)) for the standard weight."""
        if not self.has_closed_form_kernel:
            raise UnsupportedWeightError(f"weight {self.label} has no closed-form kernel")
        zz = np.asarray(z, dtype=np.complex128)
        ww = np.asarray(w, dtype=np.complex128)
        return np.asarray(self.alpha / np.pi * np.exp(self.alpha * zz * np.conj(ww)), dtype=np.complex128)

    def total_mass(self) -> float:
        """Integral of e^{-2 phi} over the plane (pi/alpha for the standard weight)."""
        if self.kind == WeightKind.STANDARD:
            return float(np.pi / self.alpha)
        from fock_ida.space.basis import radial_log_moments

        return float(np.exp(radial_log_moments(self, 1)[0]))
