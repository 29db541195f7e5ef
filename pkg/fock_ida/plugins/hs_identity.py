"""E3: direct trace of H_f^* H_f at a small order, and sum s_j^2 against the kernel integral of ||H_f k_z||^2."""

from typing import Any

import numpy as np
from numpy.typing import NDArray

from fock_ida.analyzer.convergence import relative_drift
from fock_ida.core.context import AnalysisContext
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId
from fock_ida.ida.fields import OscillationField
from fock_ida.operators.hankel import hankel_grid
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl
from fock_ida.space.basis import Basis
from fock_ida.space.symbols import Symbol

BRUTE_FORCE_ORDER = 30
BRUTE_FORCE_TOL = 1e-6
PRIMARY_ORACLE = "direct-trace"


def kernel_density(basis: Basis, field: OscillationField) -> tuple[NDArray[np.float64], str]:
    """alpha/pi for standard weights, K_N(z, z) e^{-2 phi(z)} otherwise."""
    weight = basis.weight
    if weight.has_closed_form_kernel:
        return np.full(field.centers.size, weight.alpha / np.pi), "closed-form"
    values = basis.weighted_values(field.centers)
    return np.sum(np.abs(values) ** 2, axis=-1), "diagonal"


def hs_integral(basis: Basis, field: OscillationField) -> tuple[float, str]:
    """int ||H_f k_z||^2 K(z, z) e^{-2 phi(z)} dv(z) over the field's centers."""
    density, label = kernel_density(basis, field)
    return float(np.sum(field.weights * density * field.values**2)), label


def direct_trace(f: Symbol, basis: Basis, codomain: Basis) -> float:
    """sum_k ||f e_k - P(f e_k)||^2 by applying H_f to each basis vector on the quadrature grid."""
    grid = hankel_grid(f, codomain)
    modes = codomain.weighted_values(grid.nodes)
    values = f(grid.nodes)
    total = 0.0
    for k in range(basis.N):
        product = values * modes[:, k]
        norm = float(np.sum(grid.weights * np.abs(product) ** 2))
        projection = (grid.weights * product) @ np.conj(modes)
        total += norm - float(np.sum(np.abs(projection) ** 2))
    return total


class HilbertSchmidtExperiment(BaseExperimentPlugin):
    experiment_id = ExperimentId.HS_IDENTITY

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Hilbert-Schmidt identity",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="||H_f||_{S_2}^2 equals the kernel integral of ||H_f k_z||^2",
            default_symbols=["bump(0,1)", "cbump(0,1,1)", "step(0,1,2)", "random"],
            default_p_values=[2.0],
            checks=[PRIMARY_ORACLE, "hs-identity"],
        )

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        name = case.symbol
        spectrum = context.spectrum(name)
        s2_sum = float(np.sum(spectrum.singular_values**2))
        integral, density = hs_integral(context.basis(), context.kernel_field(name))

        small = context.gram(name, BRUTE_FORCE_ORDER)
        trace = float(np.trace(small.entries).real)
        direct = context.memo(
            ("direct-trace", context.canonical(name)),
            lambda: direct_trace(
                context.symbol(name), context.basis(BRUTE_FORCE_ORDER), context.extended_basis(BRUTE_FORCE_ORDER)
            ),
        )
        reference = spectrum.reference if spectrum.reference is not None else np.zeros(0)
        return {
            "oracle": PRIMARY_ORACLE,
            "s2_sum": s2_sum,
            "s2_sum_divergent": spectrum.divergent,
            "hs_integral": integral,
            "density": density,
            "hs_relative_gap": relative_drift(s2_sum, integral),
            "delta_s2_sum": relative_drift(s2_sum, float(np.sum(reference**2))),
            "trace_order": BRUTE_FORCE_ORDER,
            "trace_matrix": trace,
            "trace_direct": direct,
            "trace_relative_gap": relative_drift(trace, direct),
        }

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        finite = [r for r in self.completed(rows) if not r.values.get("s2_sum_divergent")]
        return [
            self.bound_check(
                PRIMARY_ORACLE,
                [r.values.get("trace_relative_gap") for r in finite],
                BRUTE_FORCE_TOL,
                f"Gram trace vs H_f applied to each e_k at N={BRUTE_FORCE_ORDER}",
            ),
            self.bound_check(
                "hs-identity",
                [r.values.get("hs_relative_gap") for r in finite],
                context.config.tolerances.hs_identity,
                "|sum s^2 - int ||H_f k_z||^2| / sum s^2, both from the same Gram",
            ),
        ]
