"""fock-ida list: list registered resources."""

import json

import click
from rich.console import Console
from rich.table import Table

from ._helpers import get_plugin_registry

console = Console()


@click.group("list")
def list_cmd() -> None:
    """List experiments."""


@list_cmd.command("experiments")
@click.option("--format", "fmt", default="table", type=click.Choice(["table", "json"]), help="Output format")
def list_experiments(fmt: str) -> None:
    """List registered experiment plugins."""
    registry = get_plugin_registry()
    plugins = registry.get_all_plugins()

    if fmt == "json":
        click.echo(json.dumps([p.get_plugin_info().to_dict() for p in plugins.values()], indent=2))
        return

    table = Table(title="Experiments")
    table.add_column("ID", style="bold")
    table.add_column("Name")
    table.add_column("Version")
    table.add_column("Symbols", justify="right")
    table.add_column("p")
    table.add_column("Checks", style="dim")

    for plugin in plugins.values():
        info = plugin.get_plugin_info()
        table.add_row(
            info.experiment_id.value,
            info.name,
            info.version,
            str(len(info.default_symbols)),
            ", ".join(f"{p:g}" for p in info.default_p_values),
            ", ".join(info.checks),
        )

    console.print(table)
