"""fock-ida check: closed-form oracles followed by every experiment at its defaults."""

from pathlib import Path

import click
from rich.console import Console
from rich.table import Table

from fock_ida.analyzer.acceptance import ci_exit_code, summarize_checks
from fock_ida.analyzer.oracles import run_oracles
from fock_ida.core.config import DEFAULT_OUTPUT_ROOT
from fock_ida.core.models import ExperimentId, RunResult
from fock_ida.core.orchestrator import ExperimentOrchestrator

from ._helpers import checks_table, default_config, get_plugin_registry, prepare_config, write_outputs

console = Console()


@click.command("check")
@click.option("--output", type=click.Path(file_okay=False), help="Root directory for experiment outputs")
@click.option("--workers", type=int, help="Worker threads per experiment")
@click.option("--seed", default=0, type=int, help="Random seed")
@click.option("--oracles-only", is_flag=True, help="Skip the experiment runs")
def check_cmd(output: str | None, workers: int | None, seed: int, oracles_only: bool) -> None:
    """Run the acceptance suite and exit non-zero on any failure."""
    console.print("\n[bold]Closed-form oracles[/bold]")
    oracle_checks = run_oracles(seed=seed)
    console.print(checks_table("Oracles", oracle_checks))

    results: list[RunResult] = []
    if not oracles_only:
        registry = get_plugin_registry()
        orchestrator = ExperimentOrchestrator(registry)
        root = Path(output) if output else DEFAULT_OUTPUT_ROOT / "check"
        for experiment in ExperimentId:
            config = prepare_config(
                registry,
                default_config(experiment),
                output=root / experiment.value,
                workers=workers,
                seed=seed,
            )
            console.print(f"\n[bold]{experiment.value}[/bold] ({len(config.symbols or [])} symbols)")
            result = orchestrator.run(config)
            write_outputs(result, config)
            console.print(checks_table(experiment.value, result.checks))
            results.append(result)

    summary = Table(title="Acceptance Suite")
    summary.add_column("Stage", style="bold")
    summary.add_column("Passed", justify="right")
    summary.add_column("Failed", justify="right")
    summary.add_column("Result")
    counts = summarize_checks(oracle_checks)
    summary.add_row("oracles", str(counts["passed"]), str(counts["failed"]), _verdict(counts["failed"] == 0))
    for result in results:
        counts = summarize_checks(result.checks)
        summary.add_row(result.experiment, str(counts["passed"]), str(counts["failed"]), _verdict(result.passed))
    console.print()
    console.print(summary)

    code = ci_exit_code(results, oracle_checks)
    if code:
        raise SystemExit(code)


def _verdict(passed: bool) -> str:
    return "[green]pass[/green]" if passed else "[red]FAIL[/red]"
