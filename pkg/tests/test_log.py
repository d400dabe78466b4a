"""Tests for logging setup."""

import logging

import pytest
from rich.logging import RichHandler

from ncres.log import ROOT_LOGGER, get_logger, setup_logging


@pytest.fixture
def clean_root():
    """Remove handlers added to the ncres logger by a test."""
    logger = logging.getLogger(ROOT_LOGGER)
    saved = (list(logger.handlers), logger.level, logger.propagate)
    yield logger
    logger.handlers[:] = saved[0]
    logger.setLevel(saved[1])
    logger.propagate = saved[2]


class TestGetLogger:
    """Tests for get_logger."""

    def test_namespaced(self):
        """Test module names land under ncres."""
        assert get_logger("ncres.modules.families").name == "ncres.modules.families"
        assert get_logger("scratch").name == "ncres.scratch"
        assert get_logger(ROOT_LOGGER).name == ROOT_LOGGER


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_level_applied(self, clean_root):
        """Test the level string is applied case-insensitively."""
        logger = setup_logging("debug")
        assert logger.level == logging.DEBUG
        assert logger.propagate is False

    def test_idempotent(self, clean_root):
        """Test repeated calls keep a single RichHandler."""
        setup_logging("INFO")
        setup_logging("WARNING")
        handlers = [h for h in clean_root.handlers if isinstance(h, RichHandler)]
        assert len(handlers) == 1
        assert clean_root.level == logging.WARNING

    def test_bad_level(self, clean_root):
        """Test an unknown level name is rejected."""
        with pytest.raises(ValueError):
            setup_logging("LOUD")
