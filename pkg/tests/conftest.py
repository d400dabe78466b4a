"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path
from typing import Generator

import pytest

from ncres.catalog.builders import conifold_algebra, cyclic_mckay_algebra, tautological_algebra


@pytest.fixture
def temp_config_dir() -> Generator[Path, None, None]:
    """Create a temporary config directory for testing."""
    with tempfile.TemporaryDirectory() as tmpdir:
        config_dir = Path(tmpdir) / "ncres"
        config_dir.mkdir()
        yield config_dir


@pytest.fixture
def isolated_env(temp_config_dir: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point ncres at an empty config file and clear env overrides."""
    config_path = temp_config_dir / "config.ini"
    config_path.touch()

    monkeypatch.setenv("NCRES_CONFIG_FILE", str(config_path))
    monkeypatch.delenv("NCRES_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("NCRES_LOG_LEVEL", raising=False)

    return temp_config_dir


@pytest.fixture
def sample_config_file(temp_config_dir: Path) -> Path:
    """Create a sample config file."""
    config_path = temp_config_dir / "config.ini"
    config_path.write_text("""[ncres]
output_dir = ./reports
log_level = info
format = json
samples = 3 5 7
brute_force_max_r = 8
su3_level_cap = 2
""")
    return config_path


@pytest.fixture
def conifold():
    return conifold_algebra()


@pytest.fixture
def cyclic_7_3():
    return cyclic_mckay_algebra(7, 3)


@pytest.fixture
def tautological_3():
    return tautological_algebra(3)
