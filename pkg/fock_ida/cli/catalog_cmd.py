"""fock-ida catalog: list the named symbol suite."""

import json

import click
from rich.console import Console
from rich.table import Table

from fock_ida.catalog.symbols import catalog

console = Console()


@click.command("catalog")
@click.option("--seed", default=0, type=int, help="Seed used for random symbols")
@click.option("--format", "fmt", default="table", type=click.Choice(["table", "json"]), help="Output format")
def catalog_cmd(seed: int, fmt: str) -> None:
    """List the symbol suite with growth classes and parameters."""
    specs = catalog(seed)

    if fmt == "json":
        click.echo(json.dumps([s.to_dict() for s in specs], indent=2))
        return

    table = Table(title="Symbol Catalog")
    table.add_column("Name", style="bold")
    table.add_column("Kind", style="cyan")
    table.add_column("Growth")
    table.add_column("Parameters")
    table.add_column("Description", style="dim")

    for spec in specs:
        params = ", ".join(f"{k}={v}" for k, v in spec.to_dict()["params"].items()) or "-"
        table.add_row(
            spec.name,
            f"conj {spec.kind}" if spec.conjugate else spec.kind,
            spec.growth.value,
            params,
            spec.description,
        )

    console.print(table)
