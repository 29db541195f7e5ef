"""E6: Schatten norms of Toeplitz operators with measure symbols against mu-hat, mu-tilde and lattice sums."""

from typing import Any

import numpy as np
from numpy.typing import NDArray

from fock_ida.core.context import AnalysisContext
from fock_ida.core.errors import UndefinedInputError
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId
from fock_ida.ida.fields import OscillationField, field_norm
from fock_ida.ida.measures import DensityMeasure, berezin_measure_field, bump_density, mu_hat_field
from fock_ida.lattice.nets import make_lattice
from fock_ida.operators.berezin import berezin_field
from fock_ida.operators.matrix import OperatorMatrix
from fock_ida.operators.toeplitz import toeplitz_matrix
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentMetadata, hookimpl
from fock_ida.schatten.reports import toeplitz_criterion
from fock_ida.schatten.spectrum import SpectralReport, positive_spectrum, power_sum_norm

LINEARITY_EPSILON = 1e-3
LINEARITY_TOL = 1e-8
BEREZIN_PATH_TOL = 1e-8
BEREZIN_PROBES = (0j, 0.5 + 0.5j, 1.0 + 1.0j, -1.0 + 0.5j, 2.0 - 1.0j)
MASS_SCALES = (1.0, 1e-1, 1e-2, 1e-3)

MeasureFields = tuple[OscillationField, OscillationField, NDArray[np.float64]]


def measure_for(ctx: AnalysisContext, name: str) -> DensityMeasure:
    """Bump densities named like the bump symbols, e.g. ``bump(1+1j,0.5)``."""
    spec = ctx.spec(name)
    if spec.kind != "bump" or spec.conjugate:
        raise UndefinedInputError(f"{name} does not name a bump density")
    center = complex(spec.params.get("center", 0j))
    width = float(spec.params.get("width", 1.0))
    return bump_density(center, width)


class ToeplitzExperiment(BaseExperimentPlugin):
    experiment_id = ExperimentId.TOEPLITZ

    @hookimpl
    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Toeplitz measure criterion",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="||T_mu||_{S_p} vs ||mu-hat_r||_{L^p}, and the mu-tilde / mu-hat / lattice-sum triple",
            default_symbols=["bump(0,1)", "bump(1+1j,0.5)"],
            default_p_values=[1.0, 2.0],
            checks=["toeplitz-ratio", "measure-triple", "linearity", "vanishing-mass", "berezin-paths"],
            config_defaults={"r": 0.5},
        )

    def _operator(self, ctx: AnalysisContext, name: str) -> OperatorMatrix:
        return ctx.memo(("toeplitz", name), lambda: toeplitz_matrix(measure_for(ctx, name), ctx.basis()))

    def _spectrum(self, ctx: AnalysisContext, name: str) -> SpectralReport:
        return ctx.memo(
            ("toeplitz-spectrum", name),
            lambda: positive_spectrum(self._operator(ctx, name), ctx.config.tolerances.psd),
        )

    def _fields(self, ctx: AnalysisContext, name: str) -> MeasureFields:
        def build() -> MeasureFields:
            cfg = ctx.config
            mu = measure_for(ctx, name)
            centers, weights = ctx.centers
            hat = mu_hat_field(mu, cfg.r, centers, weights, cfg.grid_radius)
            tilde = berezin_measure_field(mu, ctx.basis(), centers, weights, cfg.grid_radius)
            lattice = make_lattice(cfg.r, 0j, cfg.grid_radius)
            return hat, tilde, np.asarray(mu.ball_mass(lattice.points, cfg.r))

        return ctx.memo(("measure-fields", name, ctx.config.r), build)

    def _linearity_defect(self, ctx: AnalysisContext, name: str) -> float:
        """|| T_{(1+eps) mu} - (1+eps) T_mu || / || T_mu || in the max norm."""
        base = self._operator(ctx, name).entries
        scaled = toeplitz_matrix(measure_for(ctx, name).scaled(1.0 + LINEARITY_EPSILON), ctx.basis()).entries
        return float(np.max(np.abs(scaled - (1.0 + LINEARITY_EPSILON) * base)) / np.max(np.abs(base)))

    def _vanishing(self, ctx: AnalysisContext, name: str, p: float) -> tuple[float, float, float]:
        """Schatten and mu-hat norms along mu scaled down by MASS_SCALES.

        Returns the largest departure of either norm from proportional scaling,
        then both norms at the smallest mass.
        """
        cfg = ctx.config
        centers, weights = ctx.centers
        mu = measure_for(ctx, name)
        schatten, hat = [], []
        for t in MASS_SCALES:
            scaled = mu.scaled(t)
            eigenvalues = np.linalg.eigvalsh(toeplitz_matrix(scaled, ctx.basis()).entries)
            schatten.append(power_sum_norm(np.maximum(eigenvalues, 0.0), p))
            field = mu_hat_field(scaled, cfg.r, centers, weights, cfg.grid_radius)
            hat.append(field_norm(field, p, cfg.tolerances.tail).value)
        scales = np.asarray(MASS_SCALES)
        defect = max(
            float(np.max(np.abs(np.asarray(schatten) / (scales * schatten[0]) - 1.0))),
            float(np.max(np.abs(np.asarray(hat) / (scales * hat[0]) - 1.0))),
        )
        return defect, schatten[-1], hat[-1]

    def _berezin_gap(self, ctx: AnalysisContext, name: str) -> float:
        """Largest difference between <T_mu k_z, k_z> and the direct integral of |k_z|^2 against mu."""
        probes = np.array(BEREZIN_PROBES)
        via_operator = berezin_field(self._operator(ctx, name), ctx.basis(), probes).real
        direct = berezin_measure_field(measure_for(ctx, name), ctx.basis(), probes).values
        return float(np.max(np.abs(via_operator - direct)))

    @hookimpl
    def run_case(self, context: AnalysisContext, case: Case) -> dict[str, Any]:
        name, p = case.symbol, case.p
        spectrum = self._spectrum(context, name)
        hat, tilde, lattice_values = self._fields(context, name)
        criterion = toeplitz_criterion(spectrum, hat, lattice_values, tilde, p, context.config.tolerances.tail)
        row: dict[str, Any] = {"r": context.config.r}
        row.update(criterion.row())
        row["mu_hat_divergent"] = criterion.mu_hat.divergent
        row["berezin_divergent"] = criterion.berezin.divergent
        row["delta_s_p_t_mu"] = spectrum.delta(p)
        row["linearity_defect"] = context.memo(("linearity", name), lambda: self._linearity_defect(context, name))
        defect, schatten_small, hat_small = context.memo(
            ("vanishing", name, p), lambda: self._vanishing(context, name, p)
        )
        row["smallest_mass_scale"] = MASS_SCALES[-1]
        row["s_p_smallest_mass"] = schatten_small
        row["mu_hat_smallest_mass"] = hat_small
        row["vanishing_defect"] = defect
        row["berezin_path_gap"] = context.memo(("berezin-gap", name), lambda: self._berezin_gap(context, name))
        return row

    @hookimpl
    def acceptance(self, context: AnalysisContext, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        done = self.completed(rows)
        bound = context.config.tolerances.ratio_bound
        triple = [v for r in done for k, v in r.values.items() if k.startswith("ratio_")]
        return [
            self.ratio_check("toeplitz-ratio", [r.values.get("toeplitz_ratio") for r in done], bound),
            self.ratio_check("measure-triple", triple, bound),
            self.bound_check("linearity", [r.values.get("linearity_defect") for r in done], LINEARITY_TOL),
            self.bound_check(
                "vanishing-mass",
                [r.values.get("vanishing_defect") for r in done],
                LINEARITY_TOL,
                f"||T_mu||_{{S_p}} and ||mu-hat_r||_{{L^p}} proportional to the mass down to {MASS_SCALES[-1]:g}",
            ),
            self.bound_check("berezin-paths", [r.values.get("berezin_path_gap") for r in done], BEREZIN_PATH_TOL),
        ]
