"""E5: the Ahlfors-Beurling transform and ||d f||_p / ||dbar f||_p for bounded symbols."""

from typing import Any

from fock_ida.analyzer.oracles import beurling_isometry_check, gaussian_beurling_check
from fock_ida.beurling.grid import PlaneGrid
from fock_ida.beurling.transform import DerivativeCheck, DerivativeStatus, derivative_lp_check
from fock_ida.core.context import AnalysisContext
from fock_ida.core.errors import UndefinedInputError
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl


class BeurlingExperiment(BaseExperimentPlugin):
    experiment_id = ExperimentId.BEURLING

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Beurling transform",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="Spectral Beurling transform checks and derivative L^p ratios of bounded symbols",
            default_symbols=["gauss", "cbump(0,1,1)", "conj(cbump(0,1,1))", "bump(0,1)", "step(0,1,2)", "zbar_gauss"],
            default_p_values=[1.5, 2.0, 3.0],
            checks=["beurling-gaussian", "beurling-isometry", "derivative-ratio", "no-periodization-violation"],
        )

    @staticmethod
    def grid(ctx: AnalysisContext) -> PlaneGrid:
        return ctx.memo(
            ("plane-grid",), lambda: PlaneGrid(ctx.config.beurling_points, ctx.config.beurling_half_width)
        )

    def _derivatives(self, ctx: AnalysisContext, name: str) -> DerivativeCheck:
        spec = ctx.spec(name)
        if not spec.bounded:
            raise UndefinedInputError(f"{name} is unbounded; derivative ratios need a bounded symbol")
        p_values = [float(p) for p in ctx.config.p_values or []]
        return ctx.memo(
            ("derivatives", spec.name),
            lambda: derivative_lp_check(ctx.symbol(name), self.grid(ctx), p_values, name=spec.name),
        )

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        check = self._derivatives(context, case.symbol)
        p = case.p
        return {
            "derivative_status": check.status.value,
            "d_norm": check.d_norms.get(p),
            "dbar_norm": check.dbar_norms.get(p),
            "derivative_ratio": check.ratios.get(p),
        }

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        done = self.completed(rows)
        grid = self.grid(context)
        violations = [
            r.symbol for r in done if r.values.get("derivative_status") == DerivativeStatus.PERIODIZATION_VIOLATION
        ]
        return [
            gaussian_beurling_check(grid),
            beurling_isometry_check(grid, context.config.seed),
            self.bound_check(
                "derivative-ratio",
                [r.values.get("derivative_ratio") for r in done],
                context.config.tolerances.ratio_bound,
                "||d f||_p / ||dbar f||_p",
            ),
            AcceptanceCheck(
                "no-periodization-violation",
                not violations,
                float(len(violations)),
                0.0,
                ", ".join(sorted(set(violations))) or "all symbols periodic on the grid",
            ),
        ]
