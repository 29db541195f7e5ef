"""Allow running as python -m fock_ida."""

from fock_ida.cli.main import cli

cli()
