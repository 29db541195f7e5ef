"""Top-level CLI group for fock-ida."""

import click

from fock_ida import __version__
from fock_ida.core.logging import configure_logging


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Finite-section experiments for Hankel and Toeplitz operators on weighted Fock spaces.

    Every run writes a CSV table and a JSON summary; the exit code is 0 when
    all enforced acceptance checks pass, 1 on a numerical failure and 2 on a
    usage error.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    configure_logging(verbose)


# Import and register subcommands
from .catalog_cmd import catalog_cmd  # noqa: E402
from .check import check_cmd  # noqa: E402
from .list_cmd import list_cmd  # noqa: E402
from .run import run_cmd  # noqa: E402

cli.add_command(run_cmd, "run")
cli.add_command(catalog_cmd, "catalog")
cli.add_command(check_cmd, "check")
cli.add_command(list_cmd, "list")
