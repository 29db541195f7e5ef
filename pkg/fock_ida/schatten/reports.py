"""Ratio tables comparing Schatten norms with their function-side characterizations."""

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from fock_ida.core.models import NormEstimate
from fock_ida.ida.fields import OscillationField, field_norm
from fock_ida.schatten.spectrum import SpectralReport, power_sum_norm

ZERO_TOL = 1e-8


def is_zero(estimate: NormEstimate) -> bool:
    return not estimate.divergent and abs(estimate.value) <= ZERO_TOL


def _ratio(a: NormEstimate, b: NormEstimate) -> float | None:
    if a.divergent or b.divergent or is_zero(a) or is_zero(b):
        return None
    return a.value / b.value


class Coherence(str, Enum):
    FINITE = "finite"
    DIVERGENT = "divergent"
    ZERO = "zero"
    INCONSISTENT = "inconsistent"


def coherence(estimates: dict[str, NormEstimate]) -> Coherence:
    """Whether a set of equivalent quantities agrees on being zero, finite or divergent."""
    flags = {e.divergent for e in estimates.values()}
    if flags == {True}:
        return Coherence.DIVERGENT
    if len(flags) > 1:
        return Coherence.INCONSISTENT
    zeros = {is_zero(e) for e in estimates.values()}
    if zeros == {True}:
        return Coherence.ZERO
    return Coherence.FINITE


@dataclass
class RatioTable:
    quantities: dict[str, NormEstimate]
    ratios: dict[str, float | None] = field(default_factory=dict)
    status: Coherence = Coherence.FINITE

    @property
    def consistent(self) -> bool:
        return self.status != Coherence.INCONSISTENT

    def within(self, bound: float) -> bool:
        """All defined ratios lie in [1/bound, bound]."""
        defined = [v for v in self.ratios.values() if v is not None]
        return all(1.0 / bound <= v <= bound for v in defined)

    def row(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for name, estimate in self.quantities.items():
            out[name] = estimate.value
            out[f"{name}_divergent"] = estimate.divergent
        for name, value in self.ratios.items():
            out[f"ratio_{name}"] = value
        out["coherence"] = self.status.value
        return out


def ratio_table(quantities: dict[str, NormEstimate]) -> RatioTable:
    ratios = {f"{a}/{b}": _ratio(quantities[a], quantities[b]) for a, b in combinations(quantities, 2)}
    return RatioTable(quantities=quantities, ratios=ratios, status=coherence(quantities))


def equivalence_report(schatten: NormEstimate, ida: NormEstimate, condition_c: NormEstimate, p: float) -> RatioTable:
    """The triple (||H_f||_{S_p}, ||f||_{IDA^p}, (int ||H_f k_z||^p)^{1/p}) and its pairwise ratios.

    ``condition_c`` carries the integral itself; its p-th root is taken here.
    """
    root = condition_c.value if math.isinf(p) else condition_c.value ** (1.0 / p)
    kernel = NormEstimate(value=root, divergent=condition_c.divergent, tail=condition_c.tail, detail=condition_c.detail)
    return ratio_table({"schatten": schatten, "ida": ida, "kernel": kernel})


class BergerCoburnStatus(str, Enum):
    FINITE = "finite"
    BOTH_ZERO = "both-zero"
    BOTH_DIVERGENT = "both-divergent"
    UNBOUNDED_DEGENERATE = "unbounded-degenerate"
    MISMATCH = "mismatch"


@dataclass
class BergerCoburnResult:
    numerator: NormEstimate
    denominator: NormEstimate
    p: float
    ratio: float | None
    status: BergerCoburnStatus
    p_interior: bool

    def row(self) -> dict[str, Any]:
        return {
            "s_p_f": self.denominator.value,
            "s_p_fbar": self.numerator.value,
            "f_divergent": self.denominator.divergent,
            "fbar_divergent": self.numerator.divergent,
            "bc_ratio": self.ratio,
            "bc_status": self.status.value,
            "p_interior": self.p_interior,
        }


def berger_coburn_ratio(f_norm: NormEstimate, fbar_norm: NormEstimate, p: float, bounded: bool) -> BergerCoburnResult:
    """||H_{conj f}||_{S_p} / ||H_f||_{S_p}.

    A zero denominator under a nonzero numerator is the failure mode of
    unbounded symbols and is reported, not raised. For bounded symbols the
    same situation is a ``MISMATCH``.
    """
    zero_f, zero_fbar = is_zero(f_norm), is_zero(fbar_norm)
    if f_norm.divergent and fbar_norm.divergent:
        status, ratio = BergerCoburnStatus.BOTH_DIVERGENT, None
    elif zero_f and zero_fbar:
        status, ratio = BergerCoburnStatus.BOTH_ZERO, None
    elif zero_f or f_norm.divergent != fbar_norm.divergent:
        status = BergerCoburnStatus.MISMATCH if bounded else BergerCoburnStatus.UNBOUNDED_DEGENERATE
        ratio = None
    else:
        status, ratio = BergerCoburnStatus.FINITE, fbar_norm.value / f_norm.value
    return BergerCoburnResult(
        numerator=fbar_norm,
        denominator=f_norm,
        p=p,
        ratio=ratio,
        status=status,
        p_interior=1.0 < p < math.inf,
    )


def simultaneous_report(
    s_f: NormEstimate, s_fbar: NormEstimate, imo: NormEstimate, sd_integral: NormEstimate, j_sum: NormEstimate
) -> RatioTable:
    """||H_f||_{S_p} + ||H_{conj f}||_{S_p} against IMO^p, the SD integral and the J sums."""
    total = NormEstimate(value=s_f.value + s_fbar.value, divergent=s_f.divergent or s_fbar.divergent, detail="spectral")
    return ratio_table({"s_sum": total, "imo": imo, "sd": sd_integral, "j": j_sum})


@dataclass
class ToeplitzCriterion:
    schatten: float
    mu_hat: NormEstimate
    lattice_sum: float
    berezin: NormEstimate
    p: float

    @property
    def ratio(self) -> float | None:
        return self.schatten / self.mu_hat.value if self.mu_hat.value > 0 else None

    def triple_ratios(self) -> dict[str, float | None]:
        values = {"mu_hat": self.mu_hat.value, "lattice": self.lattice_sum, "berezin": self.berezin.value}
        return {f"{a}/{b}": (values[a] / values[b] if values[b] > 0 else None) for a, b in combinations(values, 2)}

    def row(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "s_p_t_mu": self.schatten,
            "mu_hat_lp": self.mu_hat.value,
            "lattice_lp": self.lattice_sum,
            "berezin_lp": self.berezin.value,
            "toeplitz_ratio": self.ratio,
        }
        out.update({f"ratio_{k}": v for k, v in self.triple_ratios().items()})
        return out


def toeplitz_criterion(
    spectrum: SpectralReport,
    mu_hat: OscillationField,
    lattice_values: Any,
    berezin: OscillationField,
    p: float,
    tail_tol: float = 1e-3,
) -> ToeplitzCriterion:
    """||T_mu||_{S_p} against ||mu-hat_r||_{L^p}, the lattice l^p sum and ||mu-tilde||_{L^p}."""
    return ToeplitzCriterion(
        schatten=power_sum_norm(spectrum.singular_values, p),
        mu_hat=field_norm(mu_hat, p, tail_tol),
        lattice_sum=power_sum_norm(lattice_values, p),
        berezin=field_norm(berezin, p, tail_tol),
        p=p,
    )
