"""Logging for hyperbicycle: one Rich handler on the package logger, modules log to children."""

import logging

from rich.console import Console
from rich.logging import RichHandler

PACKAGE = "hyperbicycle"


def setup_logging(verbose: bool = False, quiet: bool = False) -> logging.Logger:
    """Attach a RichHandler writing to stderr, replacing any previous one.

    Warnings are shown by default; `verbose` adds search progress and timings,
    `quiet` keeps only errors.
    """
    level = logging.ERROR if quiet else logging.DEBUG if verbose else logging.WARNING
    logger = logging.getLogger(PACKAGE)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(
        console=Console(stderr=True),
        rich_tracebacks=True,
        show_path=verbose,
        log_time_format="[%X]",
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def get_logger(name: str = PACKAGE) -> logging.Logger:
    """Logger for a module; `__name__` inside the package lands under the package logger."""
    if name != PACKAGE and not name.startswith(f"{PACKAGE}."):
        name = f"{PACKAGE}.{name}"
    return logging.getLogger(name)


log = get_logger()
