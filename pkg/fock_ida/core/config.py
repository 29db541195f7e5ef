"""Experiment configuration loading and validation."""

import math
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from fock_ida.core.errors import ConfigError
from fock_ida.core.models import ExperimentId

WORKERS_ENV = "FOCK_IDA_WORKERS"
DEFAULT_OUTPUT_ROOT = Path("results")


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, min(64, int(raw)))
    except ValueError:
        return 1


class Perturbation(BaseModel):
    """Radial perturbation psi(rho) = amplitude * sin(frequency * rho)."""

    model_config = ConfigDict(extra="forbid")

    amplitude: float = Field(0.1, ge=-1.0, le=1.0)
    frequency: float = Field(1.0, gt=0.0, le=10.0)


class Tolerances(BaseModel):
    model_config = ConfigDict(extra="forbid")

    convergence: float = Field(0.2, gt=0.0, le=1.0)
    tail: float = Field(1e-3, gt=0.0, lt=1.0)
    spectral_tail: float = Field(1e-2, gt=0.0, lt=1.0)
    psd: float = Field(1e-10, gt=0.0, lt=1e-3)
    ratio_bound: float = Field(10.0, gt=1.0)
    hs_identity: float = Field(0.02, gt=0.0, lt=1.0)
    translate: float = Field(1e-6, gt=0.0)
    profile_decay: float = Field(1e-3, gt=0.0)


class ExperimentConfig(BaseModel):
    """Validated parameters of one experiment run.

    ``p_values`` and ``symbols`` left as ``None`` are filled in from the
    experiment plugin's defaults before the run starts.
    """

    model_config = ConfigDict(extra="forbid")

    experiment: ExperimentId
    alpha: float = Field(1.0, gt=0.0, le=10.0)
    perturbation: Perturbation | None = None
    N: int = Field(60, ge=11, le=120)
    codomain_pad: int = Field(20, ge=1, le=120)
    grid_radius: float = Field(8.0, gt=0.0, le=20.0)
    center_spacing: float = Field(0.25, gt=0.0, le=1.0)
    r: float = Field(1.0, gt=0.0, le=4.0)
    r_alt: float = Field(0.5, gt=0.0, le=4.0)
    d: int = Field(10, ge=0, le=30)
    r0: float = Field(0.5, gt=0.0, le=4.0)
    profile_radius: float = Field(6.0, gt=0.0, le=20.0)
    beurling_points: int = Field(512, ge=64, le=2048)
    beurling_half_width: float = Field(8.0, gt=0.0, le=64.0)
    p_values: list[float] | None = None
    symbols: list[str] | None = None
    output: Path | None = None
    seed: int = Field(0, ge=0)
    workers: int = Field(default_factory=_default_workers, ge=1, le=64)
    tolerances: Tolerances = Field(default_factory=Tolerances)

    @field_validator("p_values")
    @classmethod
    def _check_p_values(cls, value: list[float] | None) -> list[float] | None:
        if value is None:
            return value
        if not value:
            raise ValueError("p_values must not be empty")
        for p in value:
            if not (p > 0.0 and math.isfinite(p)):
                raise ValueError(f"p must lie in (0, inf), got {p}")
        return value

    @field_validator("symbols")
    @classmethod
    def _check_symbols(cls, value: list[str] | None) -> list[str] | None:
        if value is not None and not value:
            raise ValueError("symbol list must not be empty")
        return value

    @field_validator("beurling_points")
    @classmethod
    def _check_power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"beurling_points must be a power of two, got {value}")
        return value

    @property
    def output_dir(self) -> Path:
        return self.output if self.output is not None else DEFAULT_OUTPUT_ROOT / self.experiment.value

    @property
    def extended_order(self) -> int:
        return self.N + self.codomain_pad


def load_config(config_path: str | Path) -> ExperimentConfig:
    """Load configuration from a JSON or YAML file."""
    path = Path(config_path)
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"Cannot read config {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config {path} must contain a mapping")
    return parse_config(data)


def parse_config(data: dict[str, Any]) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(str(e)) from e


def with_overrides(config: ExperimentConfig, **overrides: Any) -> ExperimentConfig:
    """Return a re-validated copy with the non-None overrides applied.

    Fields the config never set stay unset, so experiment defaults still apply.
    """
    updates = {k: v for k, v in overrides.items() if v is not None}
    if not updates:
        return config
    data = config.model_dump(exclude_unset=True)
    data.update(updates)
    return parse_config(data)
