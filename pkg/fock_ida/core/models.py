"""Core enums and result records shared across subpackages."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class ExperimentId(str, Enum):
    EQUIVALENCE = "E1-equivalence"
    BERGER_COBURN = "E2-berger-coburn"
    HS_IDENTITY = "E3-hs-identity"
    COMPACTNESS = "E4-compactness"
    BEURLING = "E5-beurling"
    TOEPLITZ = "E6-toeplitz"


class GrowthClass(str, Enum):
    BOUNDED = "bounded"
    POLYNOMIAL = "polynomial-growth"
    COMPACT = "compactly-supported"


class Smoothness(str, Enum):
    MEASURABLE = "measurable"
    C2 = "C2"


class FieldKind(str, Enum):
    G = "G"                  # distance to holomorphic polynomials
    M2 = "M2"                # ball root mean square
    MO = "MO"                # mean oscillation
    SD = "SD"                # Gaussian standard deviation of translates
    MU_HAT = "mu_hat"        # ball measure
    BEREZIN = "berezin"
    KERNEL_HANKEL = "hankel_kernel"
    J = "J"                  # cube oscillation J(f; u)


class CaseStatus(str, Enum):
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass(frozen=True)
class NormEstimate:
    """A norm-type quantity that may be flagged divergent instead of finite.

    ``tail`` is the relative size of the integrand on the outer band of the
    truncated domain; ``value`` is the truncated value even when divergent.
    """

    value: float
    divergent: bool = False
    tail: float = 0.0
    detail: str = ""

    @property
    def finite(self) -> bool:
        return not self.divergent and math.isfinite(self.value)

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "divergent": self.divergent,
            "tail": self.tail,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "NormEstimate":
        return cls(
            value=float(data["value"]),
            divergent=bool(data.get("divergent", False)),
            tail=float(data.get("tail", 0.0)),
            detail=str(data.get("detail", "")),
        )


@dataclass
class AcceptanceCheck:
    """Outcome of one acceptance criterion."""

    name: str
    passed: bool
    value: float | None = None
    threshold: float | None = None
    detail: str = ""
    enforced: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "value": self.value,
            "threshold": self.threshold,
            "detail": self.detail,
            "enforced": self.enforced,
        }


@dataclass
class CaseResult:
    """One (symbol, p) row of an experiment."""

    experiment: str
    symbol: str
    p: float
    status: CaseStatus = CaseStatus.COMPLETED
    values: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "experiment": self.experiment,
            "symbol": self.symbol,
            "p": self.p,
            "status": self.status.value if isinstance(self.status, Enum) else self.status,
            "error": self.error,
            **self.values,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CaseResult":
        d = dict(data)
        base = {k: d.pop(k) for k in ("experiment", "symbol", "p") if k in d}
        status = d.pop("status", CaseStatus.COMPLETED.value)
        error = d.pop("error", None)
        return cls(
            experiment=base["experiment"],
            symbol=base["symbol"],
            p=float(base["p"]),
            status=CaseStatus(status) if isinstance(status, str) else status,
            values=d,
            error=error,
        )


@dataclass
class RunResult:
    """Everything produced by one experiment run."""

    experiment: str
    config: dict[str, Any]
    rows: list[CaseResult] = field(default_factory=list)
    checks: list[AcceptanceCheck] = field(default_factory=list)
    environment: dict[str, Any] = field(default_factory=dict)
    started_at: str | None = None
    completed_at: str | None = None

    @property
    def passed(self) -> bool:
        rows_ok = all(r.status == CaseStatus.COMPLETED for r in self.rows)
        return rows_ok and all(c.passed for c in self.checks if c.enforced)

    def to_dict(self) -> dict[str, Any]:
        return {
            "experiment": self.experiment,
            "passed": self.passed,
            "config": self.config,
            "rows": [r.to_dict() for r in self.rows],
            "checks": [c.to_dict() for c in self.checks],
            "environment": self.environment,
            "started_at": self.started_at,
            "completed_at": self.completed_at,
        }
