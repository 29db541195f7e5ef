"""Shared CLI helpers: registry setup, config preparation and result output."""

import re
from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from fock_ida.catalog.symbols import parse_symbol
from fock_ida.core.config import ExperimentConfig, load_config, parse_config, with_overrides
from fock_ida.core.context import AnalysisContext
from fock_ida.core.errors import FockIdaError
from fock_ida.core.models import AcceptanceCheck, ExperimentId, RunResult
from fock_ida.core.orchestrator import ExperimentOrchestrator
from fock_ida.export.matrices import write_matrix
from fock_ida.export.summary import write_summary
from fock_ida.export.tables import write_rows_csv
from fock_ida.plugins.base import ExperimentRegistry
from fock_ida.plugins.berger_coburn import BergerCoburnExperiment
from fock_ida.plugins.beurling import BeurlingExperiment
from fock_ida.plugins.compactness import CompactnessExperiment
from fock_ida.plugins.equivalence import EquivalenceExperiment
from fock_ida.plugins.hs_identity import HilbertSchmidtExperiment
from fock_ida.plugins.toeplitz import ToeplitzExperiment

ROWS_FILE = "rows.csv"
SUMMARY_FILE = "summary.json"
MATRIX_DIR = "matrices"


def get_plugin_registry() -> ExperimentRegistry:
    """Create and populate the experiment registry."""
    registry = ExperimentRegistry()
    # Register built-in experiments
    for plugin in (
        EquivalenceExperiment(),
        BergerCoburnExperiment(),
        HilbertSchmidtExperiment(),
        CompactnessExperiment(),
        BeurlingExperiment(),
        ToeplitzExperiment(),
    ):
        registry.register(plugin)
    # Discover any installed experiments
    registry.discover_plugins()
    return registry


def prepare_config(
    registry: ExperimentRegistry, config: ExperimentConfig | str | Path, **overrides: Any
) -> ExperimentConfig:
    """Load, override and resolve a config; every symbol name must parse.

    Raises ``click.UsageError`` for anything that makes the run meaningless.
    """
    try:
        base = config if isinstance(config, ExperimentConfig) else load_config(config)
        base = with_overrides(base, **overrides)
        plugin = ExperimentOrchestrator(registry).plugin_for(base)
        resolved = plugin.resolve(base)
        for name in resolved.symbols or []:
            parse_symbol(name, resolved.seed)
    except FockIdaError as e:
        raise click.UsageError(str(e)) from e
    return resolved


def default_config(experiment: ExperimentId, **fields: Any) -> ExperimentConfig:
    return parse_config({"experiment": experiment.value, **fields})


def _file_stem(symbol: str) -> str:
    return re.sub(r"[^A-Za-z0-9.+-]+", "_", symbol).strip("_")


def write_outputs(result: RunResult, config: ExperimentConfig, dump_matrices: bool = False) -> dict[str, Path]:
    """Write the CSV table, the JSON summary and optionally the Hankel Gram dumps."""
    out_dir = config.output_dir
    paths = {
        "rows": write_rows_csv(result.rows, out_dir / ROWS_FILE),
        "summary": write_summary(result, out_dir / SUMMARY_FILE),
    }
    if dump_matrices:
        context = AnalysisContext(config)
        for name in config.symbols or []:
            write_matrix(context.gram(name), out_dir / MATRIX_DIR / f"{_file_stem(name)}.txt")
        paths["matrices"] = out_dir / MATRIX_DIR
    return paths


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.3g}"


def checks_table(title: str, checks: list[AcceptanceCheck]) -> Table:
    table = Table(title=title)
    table.add_column("Check", style="bold")
    table.add_column("Result")
    table.add_column("Value", justify="right")
    table.add_column("Threshold", justify="right")
    table.add_column("Detail", style="dim", max_width=60)
    for check in checks:
        if not check.enforced:
            status = "[dim]info[/dim]"
        elif check.passed:
            status = "[green]pass[/green]"
        else:
            status = "[red]FAIL[/red]"
        table.add_row(check.name, status, _fmt(check.value), _fmt(check.threshold), check.detail)
    return table


def print_run(console: Console, result: RunResult, paths: dict[str, Path]) -> None:
    console.print(checks_table(f"{result.experiment}: {len(result.rows)} rows", result.checks))
    for label, path in paths.items():
        console.print(f"  {label}: {path}")
    verdict = "[green]passed[/green]" if result.passed else "[red]failed[/red]"
    console.print(f"  acceptance: {verdict}")
