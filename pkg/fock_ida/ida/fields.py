"""Local holomorphic fits and the oscillation fields G_r, M_{2,r} and MO_{2,r}.

On a disk the shifted monomials (w - z)^k are orthogonal, so the best
polynomial fit of degree <= d is a sum of independent projections. Fits are
done in the scaled variable u = (w - z)/r on a fixed unit-disk rule that
integrates u^j conj(u^k) exactly for j, k <= 30.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.models import FieldKind, NormEstimate
from fock_ida.space.quadrature import unit_disk_rule

logger = logging.getLogger(__name__)

SymbolLike = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]

TAIL_FLOOR = 1e-12
CHUNK = 256
DENOMINATOR_FLOOR = 1e-8


@dataclass(frozen=True)
class OscillationField:
    """Values of a non-negative functional at centers inside |z| <= radius.

    ``weights`` is the area element attached to each center, so sums of
    ``weights * values**p`` approximate L^p integrals.
    """

    centers: NDArray[np.complex128]
    values: NDArray[np.float64]
    weights: NDArray[np.float64]
    kind: FieldKind
    radius: float
    r: float | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if np.any(self.values < 0):
            raise ValueError(f"{self.kind.value} field has negative values")

    @property
    def radii(self) -> NDArray[np.float64]:
        return np.asarray(np.abs(self.centers), dtype=np.float64)

    def outer_max(self, width: float = 1.0) -> float:
        band = self.radii >= self.radius - width
        return float(np.max(self.values[band], initial=0.0))

    def radial_profile(self, bin_width: float = 0.5) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Bin upper edges and the max of the field within each radial bin."""
        edges = np.arange(bin_width, self.radius + bin_width, bin_width)
        bins = np.minimum((self.radii / bin_width).astype(int), edges.size - 1)
        profile = np.zeros(edges.size)
        np.maximum.at(profile, bins, self.values)
        return edges, profile

    def rows(self) -> list[tuple[float, float, float]]:
        return [(float(c.real), float(c.imag), float(v)) for c, v in zip(self.centers, self.values, strict=True)]


@dataclass
class LocalFit:
    """Best fit of f on B(center, r) by polynomials of degree <= d.

    ``coefficients[k]`` multiplies (w - center)^k; ``residual`` is the
    root-mean-square distance G_r^{(d)}(f)(center).
    """

    center: complex
    r: float
    d: int
    coefficients: NDArray[np.complex128]
    residual: float

    def evaluate(self, w: ArrayLike) -> NDArray[np.complex128]:
        ww = np.asarray(w, dtype=np.complex128) - self.center
        out = np.zeros(ww.shape, dtype=np.complex128)
        for c in self.coefficients[::-1]:
            out = out * ww + c
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "center": [self.center.real, self.center.imag],
            "r": self.r,
            "d": self.d,
            "coefficients": [[c.real, c.imag] for c in self.coefficients],
            "residual": self.residual,
        }


def center_grid(R: float, h: float) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """Square grid of spacing h restricted to |z| <= R, with cell areas h^2."""
    n = int(np.floor(R / h))
    axis = h * np.arange(-n, n + 1)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    z = (xs + 1j * ys).ravel()
    z = z[np.abs(z) <= R + 1e-12]
    return z.astype(np.complex128), np.full(z.size, h * h)


class _DiskFitter:
    """Vectorized fits on balls B(c, r) for many centers c at once."""

    def __init__(self, r: float, d: int):
        self.r = r
        self.d = d
        self.u, self.w = unit_disk_rule()
        self.powers = self.u[None, :] ** np.arange(d + 1)[:, None]
        self.norms = 1.0 / (np.arange(d + 1) + 1.0)

    def samples(self, f: SymbolLike, centers: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return np.asarray(f(centers[:, None] + self.r * self.u[None, :]), dtype=np.complex128)

    def fit(self, values: NDArray[np.complex128]) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
        """Residual chain [M, deg 0, ..., deg d] and scaled coefficients per row.

        Each entry of the chain is the running minimum over competitors, so
        the chain is non-increasing exactly.
        """
        rows = values.shape[0]
        chain = np.empty((rows, self.d + 2))
        coeffs = np.zeros((rows, self.d + 1), dtype=np.complex128)
        remainder = values.copy()
        chain[:, 0] = np.sqrt(np.abs(remainder) ** 2 @ self.w)
        for k in range(self.d + 1):
            a = (remainder * np.conj(self.powers[k])) @ self.w / self.norms[k]
            coeffs[:, k] = a
            remainder -= a[:, None] * self.powers[k][None, :]
            chain[:, k + 1] = np.sqrt(np.abs(remainder) ** 2 @ self.w)
        best = np.minimum.accumulate(chain, axis=1)
        # drop coefficients above the degree that attains the minimum
        attained = chain <= best[:, -1:]
        chosen = chain.shape[1] - 1 - np.argmax(attained[:, ::-1], axis=1) - 1
        mask = np.arange(self.d + 1)[None, :] <= chosen[:, None]
        return best, np.where(mask, coeffs, 0.0)

    def chains(self, f: SymbolLike, centers: NDArray[np.complex128]) -> NDArray[np.float64]:
        out = np.empty((centers.size, self.d + 2))
        for start in range(0, centers.size, CHUNK):
            block = centers[start : start + CHUNK]
            out[start : start + CHUNK], _ = self.fit(self.samples(f, block))
        return out


def local_holo_fits(
    f: SymbolLike, centers: ArrayLike, r: float, d: int
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """Coefficients in powers of (w - c) and residuals for every center."""
    if r <= 0 or d < 0:
        raise ValueError("local fits need r > 0 and d >= 0")
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    fitter = _DiskFitter(r, d)
    coeffs = np.zeros((cs.size, d + 1), dtype=np.complex128)
    residuals = np.empty(cs.size)
    for start in range(0, cs.size, CHUNK):
        block = cs[start : start + CHUNK]
        chain, scaled = fitter.fit(fitter.samples(f, block))
        coeffs[start : start + CHUNK] = scaled / r ** np.arange(d + 1)[None, :]
        residuals[start : start + CHUNK] = chain[:, -1]
    return coeffs, residuals


def local_holo_fit(f: SymbolLike, z: complex, r: float, d: int) -> LocalFit:
    coeffs, residuals = local_holo_fits(f, [complex(z)], r, d)
    return LocalFit(center=complex(z), r=float(r), d=d, coefficients=coeffs[0], residual=float(residuals[0]))


def oscillation_fields(
    f: SymbolLike, r: float, d: int, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> dict[FieldKind, OscillationField]:
    """M_{2,r}, MO_{2,r} and G_r^{(d)} from one pass; G <= MO <= M holds exactly."""
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    ws = np.ones(cs.size) if weights is None else np.asarray(weights, dtype=np.float64)
    rad = float(np.max(np.abs(cs), initial=0.0)) if radius is None else float(radius)
    chain = _DiskFitter(r, d).chains(f, cs)

    def make(kind: FieldKind, col: int, degree: int | None) -> OscillationField:
        return OscillationField(cs, chain[:, col].copy(), ws, kind, rad, r=r, d=degree)

    return {
        FieldKind.M2: make(FieldKind.M2, 0, None),
        FieldKind.MO: make(FieldKind.MO, 1, 0),
        FieldKind.G: make(FieldKind.G, d + 1, d),
    }


def g_field(
    f: SymbolLike, r: float, d: int, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> OscillationField:
    return oscillation_fields(f, r, d, centers, weights, radius)[FieldKind.G]


def mo_field(
    f: SymbolLike, r: float, centers: ArrayLike, weights: ArrayLike | None = None, radius: float | None = None
) -> OscillationField:
    return oscillation_fields(f, r, 0, centers, weights, radius)[FieldKind.MO]


def m2r_mean(f: SymbolLike, z: complex, r: float) -> float:
    """Root mean square of f over B(z, r)."""
    fitter = _DiskFitter(r, 0)
    values = fitter.samples(f, np.array([complex(z)]))
    return float(np.sqrt(np.abs(values[0]) ** 2 @ fitter.w))


def ball_average(f: SymbolLike, z: complex, r: float) -> complex:
    """The average f-hat_r(z) of f over B(z, r)."""
    fitter = _DiskFitter(r, 0)
    values = fitter.samples(f, np.array([complex(z)]))
    return complex(values[0] @ fitter.w)


def d_convergence(f: SymbolLike, z: complex, r: float, d: int) -> float:
    """Relative change of the residual from degree d to d + 2."""
    chain = _DiskFitter(r, d + 2).chains(f, np.array([complex(z)]))[0]
    base = chain[d + 1]
    return float(abs(base - chain[d + 3]) / base) if base > 0 else 0.0


def tail_test(field: OscillationField, tail_tol: float, width: float = 1.0) -> tuple[bool, float]:
    """Divergent when the outer band stays above tail_tol times the peak."""
    peak = float(np.max(field.values, initial=0.0))
    outer = field.outer_max(width)
    if peak == 0.0:
        return False, 0.0
    ratio = outer / peak
    return bool(outer > TAIL_FLOOR and ratio > tail_tol), ratio


def field_norm(field: OscillationField, p: float, tail_tol: float = 1e-3) -> NormEstimate:
    """L^p norm of a field, or a divergence flag when it does not decay (never for p = inf)."""
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    if np.isinf(p):
        return NormEstimate(value=float(np.max(field.values, initial=0.0)))
    value = float(np.sum(field.weights * field.values**p) ** (1.0 / p))
    divergent, tail = tail_test(field, tail_tol)
    if divergent:
        logger.debug(f"{field.kind.value} field flagged divergent at p={p:g} (tail {tail:.3g})")
    return NormEstimate(value=value, divergent=divergent, tail=tail, detail=field.kind.value)


def ida_norm(field: OscillationField, p: float, tail_tol: float = 1e-3) -> NormEstimate:
    return field_norm(field, p, tail_tol)


def imo_norm(
    f: SymbolLike, p: float, r: float, centers: ArrayLike, weights: ArrayLike, radius: float, tail_tol: float = 1e-3
) -> NormEstimate:
    return field_norm(mo_field(f, r, centers, weights, radius), p, tail_tol)


def bda_norm(field: OscillationField) -> float:
    return float(np.max(field.values, initial=0.0))


def vda_check(
    field: OscillationField, tol: float = 1e-3
) -> tuple[bool, tuple[NDArray[np.float64], NDArray[np.float64]]]:
    """True when the field is below ``tol`` on the outer band; also returns the radial max-profile."""
    return field.outer_max() < tol, field.radial_profile()


@dataclass
class OscillationSplitReport:
    constant: float
    lower_holds: bool
    max_violation: float

    def to_dict(self) -> dict[str, Any]:
        return {"constant": self.constant, "lower_holds": self.lower_holds, "max_violation": self.max_violation}


def oscillation_split_constant(f: SymbolLike, r: float, d: int, centers: ArrayLike) -> OscillationSplitReport:
    """Check max(G(f), G(conj f)) <= MO(f) pointwise and fit C in MO(f) <= C (G(f) + G(conj f))."""
    direct = oscillation_fields(f, r, d, centers)
    conjugate = oscillation_fields(lambda z: np.conj(f(z)), r, d, centers)
    g, g_bar = direct[FieldKind.G].values, conjugate[FieldKind.G].values
    mo = direct[FieldKind.MO].values
    excess = np.maximum(g, g_bar) - mo
    denominator = g + g_bar
    usable = denominator > DENOMINATOR_FLOOR * max(float(denominator.max(initial=0.0)), 1e-300)
    constant = float(np.max(mo[usable] / denominator[usable], initial=0.0))
    return OscillationSplitReport(
        constant=constant,
        lower_holds=bool(np.all(excess <= 0.0)),
        max_violation=float(np.max(excess, initial=0.0)),
    )
