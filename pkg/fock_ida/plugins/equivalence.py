"""E1: ||H_f||_{S_p}, ||f||_{IDA^p} and condition (C) as equivalent quantities."""

import logging
from typing import Any

import numpy as np

from fock_ida.analyzer.convergence import ratio_drifts, relative_drift
from fock_ida.catalog.symbols import DEFAULT_SUITE
from fock_ida.core.context import AnalysisContext
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId, FieldKind, NormEstimate
from fock_ida.ida.decomposition import DecompositionCertificate, certify, decompose
from fock_ida.ida.fields import (
    OscillationSplitReport,
    bda_norm,
    center_grid,
    field_norm,
    ida_norm,
    oscillation_split_constant,
)
from fock_ida.ida.gaussian import j_field, sd, sd_field
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl
from fock_ida.schatten.criteria import condition_c_from_field, key_estimate_constant
from fock_ida.schatten.reports import Coherence, equivalence_report, simultaneous_report
from fock_ida.schatten.spectrum import power_sum_norm
from fock_ida.space.symbols import z_symbol

logger = logging.getLogger(__name__)

PROBE_RADIUS = 4.0
PROBE_SPACING = 0.5
DECOMPOSITION_RADIUS = 4.5
SPLIT_BOUND = 10.0
R_DRIFT_PREFIX = "rdrift_"


class EquivalenceExperiment(BaseExperimentPlugin):
    """Coherence and ratio stability of the three equivalent Schatten quantities."""

    experiment_id = ExperimentId.EQUIVALENCE

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="IDA equivalence",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="||H_f||_{S_p} vs ||f||_{IDA^p} vs (int ||H_f k_z||^p)^{1/p}, with N and r drift",
            default_symbols=list(DEFAULT_SUITE),
            default_p_values=[1.0, 2.0, 4.0],
            checks=[
                "coherence",
                "ratio-band",
                "ratio-band-r-alt",
                "r-drift",
                "oscillation-split-lower",
                "oscillation-split-constant",
                "simultaneous",
                "sd-of-z",
                "key-estimate-constant",
                "decomposition-constant",
            ],
        )

    def _split(self, ctx: AnalysisContext, name: str) -> OscillationSplitReport:
        probes, _ = center_grid(min(PROBE_RADIUS, ctx.config.grid_radius), PROBE_SPACING)
        return ctx.memo(
            ("oscillation-split", ctx.canonical(name), ctx.config.r),
            lambda: oscillation_split_constant(ctx.symbol(name), ctx.config.r, ctx.config.d, probes),
        )

    def _certificate(self, ctx: AnalysisContext, name: str) -> DecompositionCertificate:
        def build() -> DecompositionCertificate:
            radius = min(DECOMPOSITION_RADIUS, ctx.config.grid_radius)
            return certify(decompose(ctx.symbol(name), ctx.config.r, ctx.config.d, radius=radius))

        return ctx.memo(("decomposition", ctx.canonical(name), ctx.config.r), build)

    def _simultaneous(self, ctx: AnalysisContext, name: str, p: float, schatten: NormEstimate) -> dict[str, Any]:
        cfg = ctx.config
        tail = cfg.tolerances.tail
        centers, weights = ctx.centers
        key = ctx.canonical(name)
        sd_values = ctx.memo(("sd-field", key), lambda: sd_field(ctx.symbol(name), centers, weights, cfg.grid_radius))
        j_values = ctx.memo(("j-field", key), lambda: j_field(ctx.symbol(name), cfg.grid_radius))
        report = simultaneous_report(
            s_f=schatten,
            s_fbar=ctx.spectrum(ctx.conjugate_name(name)).norm(p),
            imo=field_norm(ctx.fields(name)[FieldKind.MO], p, tail),
            sd_integral=field_norm(sd_values, p, tail),
            j_sum=field_norm(j_values, p, tail),
        )
        return {f"sim_{k}": v for k, v in report.row().items()}

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        ctx, name, p = context, case.symbol, case.p
        cfg = ctx.config
        tail = cfg.tolerances.tail
        reference_order = cfg.N - 10

        spectrum = ctx.spectrum(name)
        schatten = spectrum.norm(p)
        g = ctx.fields(name)[FieldKind.G]
        ida = ida_norm(g, p, tail)
        kernel = ctx.kernel_field(name)
        table = equivalence_report(schatten, ida, condition_c_from_field(kernel, p, tail), p)

        reference_schatten = NormEstimate(
            value=power_sum_norm(spectrum.reference if spectrum.reference is not None else [], p),
            divergent=schatten.divergent,
            detail="spectral",
        )
        reference_kernel = condition_c_from_field(ctx.kernel_field(name, reference_order), p, tail)
        reference = equivalence_report(reference_schatten, ida, reference_kernel, p)

        alt_ida = ida_norm(ctx.fields(name, cfg.r_alt)[FieldKind.G], p, tail)
        alt = equivalence_report(schatten, alt_ida, condition_c_from_field(kernel, p, tail), p)

        split = self._split(ctx, name)
        certificate = self._certificate(ctx, name)
        if not certificate.usable:
            logger.info(f"{name}: decomposition certificate not usable at r={cfg.r:g}")

        row: dict[str, Any] = {"r": cfg.r, "d": cfg.d, "N": cfg.N}
        row.update(table.row())
        row["delta_schatten"] = spectrum.delta(p)
        row["delta_kernel"] = relative_drift(table.quantities["kernel"].value, reference.quantities["kernel"].value)
        row.update(ratio_drifts(table.ratios, reference.ratios))
        row["r_alt"] = cfg.r_alt
        row["ida_r_alt"] = alt_ida.value
        row.update({f"ratio_r_alt_{k}": v for k, v in alt.ratios.items()})
        row.update(ratio_drifts(table.ratios, alt.ratios, prefix=R_DRIFT_PREFIX))
        row["spectral_tail"] = spectrum.tail_ratio
        row["bda"] = bda_norm(g)
        row["stroethoff_sup"] = float(np.max(kernel.values, initial=0.0))
        row["key_estimate_constant"] = key_estimate_constant(g, kernel)
        row["split_constant"] = split.constant
        row["split_lower_holds"] = split.lower_holds
        row["split_max_violation"] = split.max_violation
        row["decomposition_constant"] = certificate.constant
        row["decomposition_usable"] = certificate.usable
        row.update(self._simultaneous(ctx, name, p, schatten))
        return row

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        done = self.completed(rows)
        bound = context.config.tolerances.ratio_bound
        incoherent = [f"{r.symbol} p={r.p:g}" for r in done if r.values.get("coherence") == Coherence.INCONSISTENT]
        sim_incoherent = [
            f"{r.symbol} p={r.p:g}" for r in done if r.values.get("sim_coherence") == Coherence.INCONSISTENT
        ]
        ratios = [v for r in done for k, v in r.values.items() if k.startswith("ratio_") and "r_alt" not in k]
        alt_ratios = [v for r in done for k, v in r.values.items() if k.startswith("ratio_r_alt_")]
        r_drifts = [v for r in done for k, v in r.values.items() if k.startswith(R_DRIFT_PREFIX)]
        split_lower = all(bool(r.values.get("split_lower_holds", True)) for r in done)
        sd_error = abs(sd(z_symbol()) - 1.0)
        return [
            AcceptanceCheck(
                "coherence", not incoherent, float(len(incoherent)), 0.0, ", ".join(incoherent) or "all coherent"
            ),
            self.ratio_check("ratio-band", ratios, bound),
            self.ratio_check("ratio-band-r-alt", alt_ratios, bound),
            self.bound_check(
                "r-drift",
                r_drifts,
                context.config.tolerances.convergence,
                f"ratio drift from r={context.config.r:g} to r_alt={context.config.r_alt:g}",
                enforced=False,
            ),
            AcceptanceCheck("oscillation-split-lower", split_lower, detail="max(G f, G conj f) <= MO f"),
            self.bound_check(
                "oscillation-split-constant", [r.values.get("split_constant") for r in done], SPLIT_BOUND
            ),
            AcceptanceCheck(
                "simultaneous", not sim_incoherent, float(len(sim_incoherent)), 0.0, ", ".join(sim_incoherent)
            ),
            AcceptanceCheck("sd-of-z", sd_error <= 1e-8, sd_error, 1e-8),
            self.bound_check(
                "key-estimate-constant",
                [r.values.get("key_estimate_constant") for r in done],
                bound,
                "G_r(f) <= C ||H_f k_z||",
                enforced=False,
            ),
            self.bound_check(
                "decomposition-constant",
                [r.values.get("decomposition_constant") for r in done],
                bound,
                "|dbar f1| + M_{2,r}(f2) <= C G_{2r}(f)",
                enforced=False,
            ),
        ]
