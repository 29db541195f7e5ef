"""Splitting f = f1 + f2 into a part with small dbar and a part with small local means.

f1 glues the local holomorphic fits h_j on B(a_j, r) with a smooth partition
of unity subordinate to {B(a_j, r/2)} on an (r/2)-lattice, so that
dbar f1 = sum_j h_j dbar psi_j only sees the mismatch between neighbouring fits.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.ida.fields import center_grid, g_field, local_holo_fits
from fock_ida.lattice.nets import Lattice, make_lattice
from fock_ida.space.quadrature import unit_disk_rule
from fock_ida.space.symbols import bump_profile

logger = logging.getLogger(__name__)

SymbolLike = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]

MEAN_RADIAL = 16
MEAN_ANGULAR = 32
USABLE_FLOOR = 1e-10
USABLE_RELATIVE = 1e-8


@dataclass
class DecompositionCertificate:
    """Empirical C in |dbar f1| + M_{2,r}(f2) <= C G_{2r}(f) over the probes."""

    constant: float
    probes: int
    usable: int
    lhs_max: float
    g_max: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "constant": self.constant,
            "probes": self.probes,
            "usable": self.usable,
            "lhs_max": self.lhs_max,
            "g_max": self.g_max,
        }


class Decomposition:
    """f1, f2 and dbar f1 as callables on the interior of a truncated lattice."""

    def __init__(self, f: SymbolLike, r: float, d: int, lattice: Lattice, coefficients: NDArray[np.complex128]):
        self.f = f
        self.r = r
        self.d = d
        self.lattice = lattice
        self.coefficients = coefficients
        self.scale = lattice.spacing
        idx = lattice.indices
        self._offset = int(np.max(np.abs(idx), initial=0)) + 2
        size = 2 * self._offset + 1
        self._slot = np.full((size, size), -1, dtype=np.int64)
        self._slot[idx[:, 0] + self._offset, idx[:, 1] + self._offset] = np.arange(len(lattice))

    @property
    def interior_radius(self) -> float:
        """Radius inside which every point has its full set of neighbouring lattice points."""
        return self.lattice.radius - self.scale

    def _neighbours(self, w: NDArray[np.complex128]) -> NDArray[np.int64]:
        """Up to four lattice slots within one spacing of each point (-1 where absent)."""
        rel = (w - self.lattice.base) / self.scale
        m0 = np.floor(rel.real).astype(np.int64)
        s0 = np.floor(rel.imag).astype(np.int64)
        out = np.full(w.shape + (4,), -1, dtype=np.int64)
        size = self._slot.shape[0]
        for n, (dm, ds) in enumerate(((0, 0), (1, 0), (0, 1), (1, 1))):
            mi = m0 + dm + self._offset
            si = s0 + ds + self._offset
            inside = (mi >= 0) & (mi < size) & (si >= 0) & (si < size)
            out[..., n] = np.where(inside, self._slot[np.clip(mi, 0, size - 1), np.clip(si, 0, size - 1)], -1)
        return out

    def _pieces(
        self, w: ArrayLike
    ) -> tuple[NDArray[np.complex128], NDArray[np.float64], NDArray[np.complex128], NDArray[np.complex128]]:
        """Per-neighbour fit values h_j(w), bump values b_j(w), dbar b_j(w); and the neighbour mask applied."""
        ww = np.asarray(w, dtype=np.complex128)
        slots = self._neighbours(ww)
        present = slots >= 0
        safe = np.where(present, slots, 0)
        a = self.lattice.points[safe]
        x = (ww[..., None] - a) / self.scale
        t = np.abs(x) ** 2
        b = np.where(present, bump_profile(t), 0.0)
        inside = (t < 1.0) & present
        one_minus = np.where(inside, 1.0 - t, 1.0)
        dbar_b = np.where(inside, -b / one_minus**2 * x / self.scale, 0.0)
        h = np.zeros(slots.shape, dtype=np.complex128)
        for c in np.moveaxis(self.coefficients[safe], -1, 0)[::-1]:
            h = h * (ww[..., None] - a) + c
        return h, b, dbar_b, ww

    def f1(self, w: ArrayLike) -> NDArray[np.complex128]:
        h, b, _, _ = self._pieces(w)
        return np.asarray(np.sum(h * b, axis=-1) / np.sum(b, axis=-1), dtype=np.complex128)

    def f2(self, w: ArrayLike) -> NDArray[np.complex128]:
        h, b, _, ww = self._pieces(w)
        return np.asarray(self.f(ww) - np.sum(h * b, axis=-1) / np.sum(b, axis=-1), dtype=np.complex128)

    def dbar_f1(self, w: ArrayLike) -> NDArray[np.complex128]:
        """sum_j h_j dbar psi_j with psi_j = b_j / S, S = sum_i b_i."""
        h, b, dbar_b, _ = self._pieces(w)
        total = np.sum(b, axis=-1)[..., None]
        dbar_total = np.sum(dbar_b, axis=-1)[..., None]
        dbar_psi = dbar_b / total - b * dbar_total / total**2
        return np.asarray(np.sum(h * dbar_psi, axis=-1), dtype=np.complex128)

    def local_mean_f2(self, z: ArrayLike) -> NDArray[np.float64]:
        """M_{2,r}(f2) at each probe on a 16 x 32 disk rule."""
        zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
        u, wt = unit_disk_rule(MEAN_RADIAL, MEAN_ANGULAR)
        values = self.f2(zz[:, None] + self.r * u[None, :])
        return np.asarray(np.sqrt(np.abs(values) ** 2 @ wt), dtype=np.float64)


def decompose(f: SymbolLike, r: float, d: int, lattice: Lattice | None = None, radius: float = 4.5) -> Decomposition:
    """Build f1 from local fits on an (r/2)-lattice (made here unless one is given)."""
    lat = lattice if lattice is not None else make_lattice(r / 2.0, 0j, radius)
    if not np.isclose(lat.spacing, r / 2.0):
        raise ValueError(f"decomposition needs an (r/2)-lattice, got spacing {lat.spacing:g} for r={r:g}")
    coefficients, residuals = local_holo_fits(f, lat.points, r, d)
    logger.debug(f"decomposition: {len(lat)} local fits, max residual {float(np.max(residuals)):.3g}")
    return Decomposition(f, r, d, lat, coefficients)


def certify(decomposition: Decomposition, probe_spacing: float = 0.25) -> DecompositionCertificate:
    """Compare |dbar f1| + M_{2,r}(f2) with G_{2r}(f) on probes away from the lattice edge."""
    r, s = decomposition.r, decomposition.scale
    probe_radius = decomposition.lattice.radius - 2.0 * r - s
    if probe_radius <= 0:
        raise ValueError("lattice too small to certify the decomposition")
    probes, _ = center_grid(probe_radius, probe_spacing)
    lhs = np.abs(decomposition.dbar_f1(probes)) + decomposition.local_mean_f2(probes)
    g = g_field(decomposition.f, 2.0 * r, decomposition.d, probes).values
    g_max = float(np.max(g, initial=0.0))
    usable = g > max(USABLE_RELATIVE * g_max, USABLE_FLOOR)
    constant = float(np.max(lhs[usable] / g[usable], initial=0.0))
    certificate = DecompositionCertificate(
        constant=constant,
        probes=int(probes.size),
        usable=int(np.sum(usable)),
        lhs_max=float(np.max(lhs, initial=0.0)),
        g_max=g_max,
    )
    logger.debug(f"decomposition certificate: {certificate.to_dict()}")
    return certificate
