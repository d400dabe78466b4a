"""Logging setup using rich."""

import logging

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "ncres"


def get_logger(name: str) -> logging.Logger:
    """Return a logger namespaced under ``ncres``."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """Attach a single RichHandler (stderr) to the ncres logger."""
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
