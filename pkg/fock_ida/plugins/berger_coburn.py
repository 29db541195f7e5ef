"""E2: ||H_{conj f}||_{S_p} against ||H_f||_{S_p}, including the unbounded failure mode."""

from typing import Any

from fock_ida.catalog.symbols import DEFAULT_SUITE
from fock_ida.core.context import AnalysisContext
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl
from fock_ida.schatten.reports import BergerCoburnStatus, berger_coburn_ratio


class BergerCoburnExperiment(BaseExperimentPlugin):
    experiment_id = ExperimentId.BERGER_COBURN

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Berger-Coburn",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="Conjugation symmetry of Schatten membership for bounded symbols",
            default_symbols=list(DEFAULT_SUITE),
            default_p_values=[1.5, 2.0, 4.0],
            checks=["bounded-ratio", "bounded-consistent", "unbounded-failure-mode"],
        )

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        name, p = case.symbol, case.p
        spec = context.spec(name)
        conjugate = context.conjugate_name(name)
        f_spectrum = context.spectrum(name)
        fbar_spectrum = context.spectrum(conjugate)
        result = berger_coburn_ratio(f_spectrum.norm(p), fbar_spectrum.norm(p), p, spec.bounded)
        row: dict[str, Any] = {"conjugate": conjugate, "growth": spec.growth.value, "bounded": spec.bounded}
        row.update(result.row())
        row["delta_f"] = f_spectrum.delta(p)
        row["delta_fbar"] = fbar_spectrum.delta(p)
        return row

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        done = self.completed(rows)
        bounded = [r for r in done if r.values.get("bounded")]
        mismatched = [
            f"{r.symbol} p={r.p:g}" for r in bounded if r.values.get("bc_status") == BergerCoburnStatus.MISMATCH
        ]
        checks = [
            self.bound_check(
                "bounded-ratio",
                [r.values.get("bc_ratio") for r in bounded if r.values.get("p_interior")],
                context.config.tolerances.ratio_bound,
                "||H_conj f||_Sp / ||H_f||_Sp for 1 < p < inf",
            ),
            AcceptanceCheck(
                "bounded-consistent",
                not mismatched,
                float(len(mismatched)),
                0.0,
                ", ".join(mismatched) or "no zero/divergence mismatch",
            ),
        ]
        z_rows = [r for r in done if context.spec(r.symbol).kind == "z" and not context.spec(r.symbol).conjugate]
        if z_rows:
            recorded = all(r.values.get("bc_status") == BergerCoburnStatus.UNBOUNDED_DEGENERATE for r in z_rows)
            numerator = min(float(r.values.get("s_p_fbar") or 0.0) for r in z_rows)
            checks.append(
                AcceptanceCheck(
                    "unbounded-failure-mode",
                    recorded and numerator > 0.0,
                    numerator,
                    None,
                    "f = z: ||H_conj f|| bounded away from 0 while ||H_f|| = 0",
                )
            )
        return checks
