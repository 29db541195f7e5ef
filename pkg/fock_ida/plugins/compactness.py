"""E4: radial profiles of ||H_f k_z|| and the shift identity."""

from typing import Any

import numpy as np

from fock_ida.core.context import AnalysisContext
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId, FieldKind, GrowthClass
from fock_ida.ida.fields import bda_norm, vda_check
from fock_ida.operators.hankel import clean_gram, kernel_norms
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl
from fock_ida.schatten.criteria import StroethoffReport, stroethoff_quantities, translate_norm

TRANSLATE_PROBES = (0j, 1.0 + 0j, 1.0 + 1.0j, 0.5 + 0j, -1.5 + 0.5j)
PROFILE_BIN = 0.5
ISOMETRIC_BAND = (0.9, 1.1)


class CompactnessExperiment(BaseExperimentPlugin):
    experiment_id = ExperimentId.COMPACTNESS

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Compactness signatures",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="Decay of ||H_f k_z|| for VDA symbols, a flat profile for zbar, and the shift identity",
            default_symbols=["bump(0,1)", "cbump(0,1,1)", "zbar", "zbar_gauss"],
            default_p_values=[2.0],
            checks=["profile-decay", "zbar-profile", "translate-identity"],
        )

    def _stroethoff(self, ctx: AnalysisContext, name: str) -> StroethoffReport:
        def build() -> StroethoffReport:
            gram = clean_gram(ctx.gram(name), ctx.config.tolerances.psd)
            centers, _ = ctx.centers
            return stroethoff_quantities(gram, ctx.basis(), centers, PROFILE_BIN)

        return ctx.memo(("stroethoff", ctx.canonical(name)), build)

    def _translate_gap(self, ctx: AnalysisContext, name: str) -> float | None:
        """max over probes of | ||H_f k_z|| - ||(I - P)(f o tau_z)|| |; None off the standard weight."""
        if not ctx.weight.has_closed_form_kernel:
            return None
        gram = clean_gram(ctx.gram(name), ctx.config.tolerances.psd)
        probes = np.array(TRANSLATE_PROBES)
        direct = kernel_norms(gram, ctx.basis(), probes)
        shifted = np.array([translate_norm(ctx.symbol(name), z, ctx.extended_basis()) for z in probes])
        return float(np.max(np.abs(direct - shifted)))

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        name = case.symbol
        cfg = context.config
        report = self._stroethoff(context, name)
        g = context.fields(name)[FieldKind.G]
        vanishing, _ = vda_check(g, cfg.tolerances.profile_decay)
        inner = report.edges <= cfg.profile_radius
        gap = context.memo(("translate", context.canonical(name)), lambda: self._translate_gap(context, name))
        return {
            "growth": context.spec(name).growth.value,
            "stroethoff_sup": report.sup,
            "profile_at_radius": report.value_at(cfg.profile_radius),
            "profile_radius": cfg.profile_radius,
            "profile_min": float(np.min(report.profile[inner], initial=np.inf)),
            "profile_max": float(np.max(report.profile[inner], initial=0.0)),
            "bda": bda_norm(g),
            "vda": vanishing,
            "translate_gap": gap,
        }

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        done = self.completed(rows)
        tol = context.config.tolerances
        compact = [r for r in done if r.values.get("growth") == GrowthClass.COMPACT]
        checks = [
            self.bound_check(
                "profile-decay",
                [r.values.get("profile_at_radius") for r in compact],
                tol.profile_decay,
                f"||H_f k_z|| beyond |z| = {context.config.profile_radius:g} for compactly supported symbols",
            ),
            self.bound_check(
                "translate-identity",
                [r.values.get("translate_gap") for r in done],
                tol.translate,
                f"| ||H_f k_z|| - ||(I - P)(f o tau_z)|| | at {len(TRANSLATE_PROBES)} probes",
            ),
        ]
        flat = [r for r in done if context.spec(r.symbol).kind == "zbar" and not context.spec(r.symbol).conjugate]
        if flat:
            low = min(float(r.values["profile_min"]) for r in flat)
            high = max(float(r.values["profile_max"]) for r in flat)
            lower, upper = ISOMETRIC_BAND
            checks.append(
                AcceptanceCheck(
                    "zbar-profile",
                    lower <= low and high <= upper,
                    high if high > upper else low,
                    upper if high > upper else lower,
                    f"profile within [{lower:g}, {upper:g}] on |z| < {context.config.profile_radius:g}",
                )
            )
        return checks
