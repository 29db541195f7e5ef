"""Experiment plugin system: hook specs, base class, and registry."""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import pluggy

from fock_ida.core.config import ExperimentConfig
from fock_ida.core.models import AcceptanceCheck, CaseResult, CaseStatus, ExperimentId

if TYPE_CHECKING:
    from fock_ida.core.context import AnalysisContext

logger = logging.getLogger(__name__)

PROJECT_NAME = "fock_ida"
ENTRY_POINT_GROUP = "fock_ida.experiments"
hookspec = pluggy.HookspecMarker(PROJECT_NAME)
hookimpl = pluggy.HookimplMarker(PROJECT_NAME)


@dataclass
class ExperimentMetadata:
    """Metadata describing an experiment plugin."""

    name: str
    experiment_id: ExperimentId
    version: str
    description: str
    default_symbols: list[str] = field(default_factory=list)
    default_p_values: list[float] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)
    config_defaults: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "experiment_id": self.experiment_id.value,
            "version": self.version,
            "description": self.description,
            "default_symbols": list(self.default_symbols),
            "default_p_values": list(self.default_p_values),
            "checks": list(self.checks),
            "config_defaults": dict(self.config_defaults),
        }


@dataclass
class ProgressUpdate:
    """Progress update emitted while an experiment runs."""

    experiment: str
    case_label: str
    case_index: int
    total_cases: int
    percent_complete: float
    message: str = ""


@dataclass(frozen=True)
class Case:
    """One unit of work: a symbol name and an exponent."""

    symbol: str
    p: float

    @property
    def label(self) -> str:
        return f"{self.symbol} p={self.p:g}"


class ExperimentHookSpec:
    """Hook specifications that experiment plugins implement."""

    @hookspec
    def get_plugin_info(self) -> ExperimentMetadata:
        """Return plugin metadata."""

    @hookspec
    def run_case(self, context: "AnalysisContext", case: Case) -> dict[str, Any]:
        """Compute one (symbol, p) row."""

    @hookspec
    def acceptance(self, context: "AnalysisContext", rows: list[CaseResult]) -> list[AcceptanceCheck]:
        """Evaluate the experiment's acceptance criteria over all rows."""


class BaseExperimentPlugin(ABC):
    """Abstract base class for experiment plugins."""

    experiment_id: ExperimentId

    @abstractmethod
    def get_plugin_info(self) -> ExperimentMetadata:
        """Return plugin metadata."""

    @abstractmethod
    def run_case(self, context: "AnalysisContext", case: Case) -> dict[str, Any]:
        """Compute one (symbol, p) row."""

    def acceptance(self, context: "AnalysisContext", rows: list[CaseResult]) -> list[AcceptanceCheck]:
        """Acceptance checks. Override per experiment."""
        return []

    def resolve(self, config: ExperimentConfig) -> ExperimentConfig:
        """Fill in the experiment's default symbols, exponents and any fields the config left unset."""
        info = self.get_plugin_info()
        updates: dict[str, Any] = {k: v for k, v in info.config_defaults.items() if k not in config.model_fields_set}
        if config.symbols is None:
            updates["symbols"] = list(info.default_symbols)
        if config.p_values is None:
            updates["p_values"] = list(info.default_p_values)
        return config.model_copy(update=updates) if updates else config

    def cases(self, config: ExperimentConfig) -> list[Case]:
        symbols = config.symbols or []
        p_values = config.p_values or []
        return [Case(symbol=s, p=float(p)) for s in symbols for p in p_values]

    @staticmethod
    def completed(rows: list[CaseResult]) -> list[CaseResult]:
        return [r for r in rows if r.status == CaseStatus.COMPLETED]

    @staticmethod
    def ratio_check(name: str, values: list[float | None], bound: float, enforced: bool = True) -> AcceptanceCheck:
        """All defined values lie in [1/bound, bound]; the worst log-distance is reported."""
        defined = [v for v in values if v is not None and math.isfinite(v) and v > 0]
        if not defined:
            return AcceptanceCheck(name, True, None, bound, "no defined ratios", enforced)
        worst = max(defined, key=lambda v: abs(math.log(v)))
        passed = all(1.0 / bound <= v <= bound for v in defined)
        return AcceptanceCheck(name, passed, worst, bound, f"{len(defined)} ratios", enforced)

    @staticmethod
    def bound_check(
        name: str, values: list[float | None], threshold: float, detail: str = "", enforced: bool = True
    ) -> AcceptanceCheck:
        """All defined values are at most ``threshold``; the largest is reported."""
        defined = [v for v in values if v is not None and not math.isnan(v)]
        if not defined:
            return AcceptanceCheck(name, True, None, threshold, detail or "no values", enforced)
        worst = max(defined)
        return AcceptanceCheck(name, worst <= threshold, worst, threshold, detail, enforced)


class ExperimentRegistry:
    """Discovers and manages experiment plugins."""

    def __init__(self) -> None:
        self._manager = pluggy.PluginManager(PROJECT_NAME)
        self._manager.add_hookspecs(ExperimentHookSpec)
        self._plugins: dict[str, BaseExperimentPlugin] = {}

    def discover_plugins(self) -> None:
        """Discover plugins from the ``fock_ida.experiments`` entry points."""
        try:
            self._manager.load_setuptools_entrypoints(ENTRY_POINT_GROUP)
        except Exception as e:
            logger.debug(f"Entry point discovery failed: {e}")

        for plugin in self._manager.get_plugins():
            if isinstance(plugin, type) and issubclass(plugin, BaseExperimentPlugin):
                instance = plugin()
            elif isinstance(plugin, BaseExperimentPlugin):
                instance = plugin
            else:
                continue
            try:
                info = instance.get_plugin_info()
            except Exception as e:
                logger.warning(f"Skipping plugin {plugin!r}: {e}")
                continue
            self._plugins.setdefault(info.experiment_id.value, instance)

    def register(self, plugin: BaseExperimentPlugin) -> None:
        """Manually register a plugin."""
        info = plugin.get_plugin_info()
        self._plugins[info.experiment_id.value] = plugin
        try:
            self._manager.register(plugin)
        except ValueError:
            pass  # Already registered

    def get_plugin(self, experiment_id: str | ExperimentId) -> BaseExperimentPlugin | None:
        key = experiment_id.value if isinstance(experiment_id, ExperimentId) else experiment_id
        return self._plugins.get(key)

    def get_all_plugins(self) -> dict[str, BaseExperimentPlugin]:
        return dict(sorted(self._plugins.items()))
