"""fock-ida run: execute one experiment from a config file."""

import click
from rich.console import Console

from fock_ida.analyzer.acceptance import ci_exit_code
from fock_ida.core.orchestrator import ExperimentOrchestrator
from fock_ida.plugins.base import ProgressUpdate

from ._helpers import get_plugin_registry, prepare_config, print_run, write_outputs

console = Console()


@click.command("run")
@click.argument("config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--N", "n", type=int, help="Finite-section order")
@click.option("--seed", type=int, help="Random seed")
@click.option("--output", type=click.Path(file_okay=False), help="Output directory")
@click.option("--p", "p_values", type=float, multiple=True, help="Exponent (repeatable)")
@click.option("--symbol", "symbols", multiple=True, help="Symbol name from the catalog (repeatable)")
@click.option("--workers", type=int, help="Worker threads (default: $FOCK_IDA_WORKERS or 1)")
@click.option("--dump-matrices", is_flag=True, help="Also write the Hankel Gram matrices as text")
@click.option("--quiet", is_flag=True, help="Suppress progress output")
def run_cmd(
    config_path: str,
    n: int | None,
    seed: int | None,
    output: str | None,
    p_values: tuple[float, ...],
    symbols: tuple[str, ...],
    workers: int | None,
    dump_matrices: bool,
    quiet: bool,
) -> None:
    """Run the experiment described by CONFIG_PATH (JSON or YAML)."""
    registry = get_plugin_registry()
    config = prepare_config(
        registry,
        config_path,
        N=n,
        seed=seed,
        output=output,
        p_values=list(p_values) or None,
        symbols=list(symbols) or None,
        workers=workers,
    )

    orchestrator = ExperimentOrchestrator(registry)
    if not quiet:
        console.print(f"\n[bold]Running {config.experiment.value}[/bold]")
        console.print(f"  N: {config.N}  r: {config.r:g}  seed: {config.seed}  workers: {config.workers}")
        console.print(f"  symbols: {', '.join(config.symbols or [])}")
        console.print(f"  p: {', '.join(f'{p:g}' for p in config.p_values or [])}\n")

        def show(update: ProgressUpdate) -> None:
            if update.case_index < update.total_cases:
                console.print(f"  [{update.percent_complete:5.1f}%] {update.case_label}: {update.message}")

        orchestrator.add_progress_listener(show)

    result = orchestrator.run(config)
    paths = write_outputs(result, config, dump_matrices)
    if not quiet:
        print_run(console, result, paths)
    code = ci_exit_code(result)
    if code:
        raise SystemExit(code)
