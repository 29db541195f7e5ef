"""Kernel-side criteria: condition (C), Stroethoff quantities and the shift identity."""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import UnsupportedWeightError
from fock_ida.core.models import NormEstimate
from fock_ida.ida.fields import OscillationField, field_norm
from fock_ida.operators.hankel import hankel_kernel_field
from fock_ida.operators.matrix import OperatorMatrix
from fock_ida.operators.projection import bergman_project
from fock_ida.space.basis import Basis
from fock_ida.space.quadrature import grid_for_symbol
from fock_ida.space.symbols import Symbol

KERNEL_FLOOR = 1e-10


def condition_c_integral(
    gram: OperatorMatrix,
    basis: Basis,
    p: float,
    centers: ArrayLike,
    weights: ArrayLike,
    radius: float,
    tail_tol: float = 1e-3,
) -> NormEstimate:
    """int ||H_f k_z||^p dv(z) over |z| <= radius (the p-th power, not its root)."""
    return condition_c_from_field(hankel_kernel_field(gram, basis, centers, weights, radius), p, tail_tol)


def condition_c_from_field(kernel: OscillationField, p: float, tail_tol: float = 1e-3) -> NormEstimate:
    estimate = field_norm(kernel, p, tail_tol)
    value = estimate.value if math.isinf(p) else estimate.value**p
    return NormEstimate(value=value, divergent=estimate.divergent, tail=estimate.tail, detail="condition-C")


@dataclass
class StroethoffReport:
    sup: float
    edges: NDArray[np.float64]
    profile: NDArray[np.float64]

    def value_at(self, radius: float) -> float:
        """Largest profile value over bins at or beyond ``radius``."""
        outer = self.edges > radius
        return float(np.max(self.profile[outer], initial=0.0))

    def to_dict(self) -> dict[str, Any]:
        return {"sup": self.sup, "edges": self.edges.tolist(), "profile": self.profile.tolist()}


def stroethoff_quantities(
    gram: OperatorMatrix, basis: Basis, probes: ArrayLike, bin_width: float = 0.5
) -> StroethoffReport:
    """sup over probes of ||(I - P)(f k_z)|| and its radial max-profile."""
    field = hankel_kernel_field(gram, basis, probes)
    edges, profile = field.radial_profile(bin_width)
    return StroethoffReport(sup=float(np.max(field.values, initial=0.0)), edges=edges, profile=profile)


def translate_norm(f: Symbol, z: complex, codomain: Basis) -> float:
    """||(I - P)(f o tau_z)|| in the probability-normalized Gaussian measure.

    The symbol is shifted and integrated on its own grid; the projection
    uses the codomain basis.
    """
    weight = codomain.weight
    if not weight.has_closed_form_kernel:
        raise UnsupportedWeightError(f"the shift identity needs a standard weight, got {weight.label}")
    shifted = f.translate(complex(z))
    grid = grid_for_symbol(shifted, weight, codomain.N)
    values = shifted(grid.nodes) * np.exp(-weight.phi(grid.nodes))
    total = float(np.sum(grid.weights * np.abs(values) ** 2))
    projected = float(np.sum(np.abs(bergman_project(values, codomain, grid, weighted=True)) ** 2))
    return float(np.sqrt(max(total - projected, 0.0) / weight.total_mass()))


def key_estimate_constant(g: OscillationField, kernel: OscillationField) -> float:
    """Smallest C with G_r(f)(z) <= C ||H_f k_z|| over common probes where the kernel norm is visible."""
    if g.centers.shape != kernel.centers.shape or not np.allclose(g.centers, kernel.centers):
        raise ValueError("fields must share their centers")
    usable = kernel.values > KERNEL_FLOOR
    return float(np.max(g.values[usable] / kernel.values[usable], initial=0.0))
