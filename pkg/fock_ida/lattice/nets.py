"""Square r-lattices, sublattice splittings and separation diagnostics."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from fock_ida.core.errors import UndefinedInputError


@dataclass(frozen=True)
class Lattice:
    """Points w1 + r(m + i s) with |point| <= R; ``indices`` holds the integer pairs (m, s)."""

    base: complex
    spacing: float
    radius: float
    points: NDArray[np.complex128]
    indices: NDArray[np.int64]

    def __len__(self) -> int:
        return int(self.points.size)


@dataclass(frozen=True)
class SublatticeSplit:
    K: int
    labels: NDArray[np.int64]
    sublattices: list[NDArray[np.complex128]]


def make_lattice(r: float, w1: complex = 0j, R: float = 8.0) -> Lattice:
    if r <= 0 or R <= 0:
        raise ValueError("lattice spacing and radius must be positive")
    w1 = complex(w1)
    reach = int(np.ceil((R + abs(w1)) / r)) + 1
    m, s = np.meshgrid(np.arange(-reach, reach + 1), np.arange(-reach, reach + 1), indexing="ij")
    m, s = m.ravel(), s.ravel()
    pts = w1 + r * (m + 1j * s)
    keep = np.abs(pts) <= R
    return Lattice(
        base=w1,
        spacing=float(r),
        radius=float(R),
        points=pts[keep].astype(np.complex128),
        indices=np.stack([m[keep], s[keep]], axis=1).astype(np.int64),
    )


def split_lattice(lat: Lattice, K: int) -> SublatticeSplit:
    """K^2 residue classes of (m mod K, s mod K); within a class points are at least K r apart."""
    if K < 1:
        raise ValueError(f"K must be at least 1, got {K}")
    residues = np.mod(lat.indices, K)
    labels = (residues[:, 0] * K + residues[:, 1]).astype(np.int64)
    sublattices = [lat.points[labels == j] for j in range(K * K)]
    return SublatticeSplit(K=K, labels=labels, sublattices=sublattices)


def separation_constant(points: ArrayLike) -> float:
    """Minimal distance between distinct entries (zero when a point repeats)."""
    pts = np.atleast_1d(np.asarray(points, dtype=np.complex128)).ravel()
    if pts.size < 2:
        raise UndefinedInputError("separation needs at least two points")
    xy = np.stack([pts.real, pts.imag], axis=1)
    return float(np.min(pdist(xy)))


def covering_radius(lat: Lattice, probe_radius: float, probe_step: float = 0.05) -> float:
    """Largest distance from a probe point in |z| <= probe_radius to its nearest lattice point."""
    axis = np.arange(-probe_radius, probe_radius + probe_step / 2, probe_step)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    probes = np.stack([xs.ravel(), ys.ravel()], axis=1)
    probes = probes[np.hypot(probes[:, 0], probes[:, 1]) <= probe_radius]
    tree = cKDTree(np.stack([lat.points.real, lat.points.imag], axis=1))
    dist, _ = tree.query(probes)
    return float(np.max(dist))


def lattice_lp_sum(values: ArrayLike, p: float) -> float:
    """l^p norm of values indexed by lattice points (max for p = inf)."""
    v = np.abs(np.asarray(values, dtype=np.float64))
    if np.isinf(p):
        return float(np.max(v, initial=0.0))
    return float(np.sum(v**p) ** (1.0 / p))
