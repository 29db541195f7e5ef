"""Experiment run orchestrator."""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime, timezone

from fock_ida.analyzer.convergence import convergence_check
from fock_ida.core.config import ExperimentConfig
from fock_ida.core.context import AnalysisContext
from fock_ida.core.environment import get_platform_info
from fock_ida.core.errors import ConfigError
from fock_ida.core.models import AcceptanceCheck, CaseResult, CaseStatus, RunResult
from fock_ida.plugins.base import BaseExperimentPlugin, Case, ExperimentRegistry, ProgressUpdate

logger = logging.getLogger(__name__)

ProgressListener = Callable[[ProgressUpdate], None]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class ExperimentOrchestrator:
    """Runs the (symbol, p) cases of an experiment on a worker pool.

    Rows come back in case order whatever the worker count; progress
    listeners are called from the submitting thread only.
    """

    def __init__(self, registry: ExperimentRegistry):
        self.registry = registry
        self._progress_listeners: list[ProgressListener] = []

    def plugin_for(self, config: ExperimentConfig) -> BaseExperimentPlugin:
        plugin = self.registry.get_plugin(config.experiment)
        if plugin is None:
            raise ConfigError(f"No plugin registered for experiment: {config.experiment.value}")
        return plugin

    def run(self, config: ExperimentConfig) -> RunResult:
        plugin = self.plugin_for(config)
        config = plugin.resolve(config)
        context = AnalysisContext(config)
        cases = plugin.cases(config)
        experiment = config.experiment.value
        started_at = _now()
        logger.info(f"{experiment}: {len(cases)} cases on {config.workers} worker(s)")

        rows: list[CaseResult | None] = [None] * len(cases)
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = {pool.submit(self._run_case, plugin, context, case): i for i, case in enumerate(cases)}
            for done, future in enumerate(as_completed(futures), start=1):
                index = futures[future]
                row = future.result()
                rows[index] = row
                self._notify_progress(
                    ProgressUpdate(
                        experiment=experiment,
                        case_label=cases[index].label,
                        case_index=index,
                        total_cases=len(cases),
                        percent_complete=100.0 * done / max(len(cases), 1),
                        message=row.status.value,
                    )
                )

        completed_rows = [r for r in rows if r is not None]
        checks = self._acceptance(plugin, context, completed_rows)
        result = RunResult(
            experiment=experiment,
            config=config.model_dump(mode="json"),
            rows=completed_rows,
            checks=checks,
            environment=get_platform_info(),
            started_at=started_at,
            completed_at=_now(),
        )
        failed = [c.name for c in checks if c.enforced and not c.passed]
        if failed:
            logger.warning(f"{experiment}: acceptance failed for {', '.join(failed)}")
        self._notify_progress(
            ProgressUpdate(
                experiment=experiment,
                case_label="Complete",
                case_index=len(cases),
                total_cases=len(cases),
                percent_complete=100.0,
                message="passed" if result.passed else "failed",
            )
        )
        return result

    def _run_case(self, plugin: BaseExperimentPlugin, context: AnalysisContext, case: Case) -> CaseResult:
        experiment = context.config.experiment.value
        logger.debug(f"{experiment}: start {case.label}")
        try:
            values = plugin.run_case(context, case)
        except Exception as e:
            logger.error(f"{experiment}: case {case.label} failed: {e}")
            return CaseResult(
                experiment=experiment,
                symbol=case.symbol,
                p=case.p,
                status=CaseStatus.FAILED,
                error=f"{type(e).__name__}: {e}",
            )
        logger.debug(f"{experiment}: finished {case.label}")
        return CaseResult(experiment=experiment, symbol=case.symbol, p=case.p, values=values)

    def _acceptance(
        self, plugin: BaseExperimentPlugin, context: AnalysisContext, rows: list[CaseResult]
    ) -> list[AcceptanceCheck]:
        checks: list[AcceptanceCheck] = []
        failed_rows = [r for r in rows if r.status == CaseStatus.FAILED]
        checks.append(
            AcceptanceCheck(
                name="cases-completed",
                passed=not failed_rows,
                value=float(len(failed_rows)),
                threshold=0.0,
                detail=", ".join(f"{r.symbol} p={r.p:g}" for r in failed_rows),
            )
        )
        checks.append(convergence_check(rows, context.config.tolerances.convergence))
        try:
            checks.extend(plugin.acceptance(context, rows))
        except Exception as e:
            logger.error(f"Acceptance evaluation failed: {e}")
            checks.append(AcceptanceCheck(name="acceptance", passed=False, detail=f"{type(e).__name__}: {e}"))
        return checks

    def add_progress_listener(self, callback: ProgressListener) -> None:
        self._progress_listeners.append(callback)

    def remove_progress_listener(self, callback: ProgressListener) -> None:
        self._progress_listeners = [cb for cb in self._progress_listeners if cb != callback]

    def _notify_progress(self, update: ProgressUpdate) -> None:
        for listener in self._progress_listeners:
            try:
                listener(update)
            except Exception as e:
                logger.warning(f"Progress listener error: {e}")
