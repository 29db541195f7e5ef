"""Logging setup for the command line."""

import logging
import os

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVEL_ENV = "FOCK_IDA_LOG_LEVEL"


def configure_logging(verbose: bool = False, console: Console | None = None) -> None:
    """Route library logging through rich; FOCK_IDA_LOG_LEVEL overrides the flag."""
    level_name = os.environ.get(LOG_LEVEL_ENV, "DEBUG" if verbose else "WARNING").upper()
    level = getattr(logging, level_name, logging.WARNING)
    handler = RichHandler(console=console or Console(stderr=True), show_path=False, rich_tracebacks=True)
    root = logging.getLogger("fock_ida")
    root.handlers = [handler]
    root.setLevel(level)
    root.propagate = False
