"""Tests for settings and the config parser."""

from pathlib import Path

import pytest

from ncres.config.models import DEFAULT_SAMPLES, OutputFormat, Settings
from ncres.config.parser import get_config_path, load_settings
from ncres.errors import ParameterError


class TestSettings:
    """Tests for the Settings dataclass."""

    def test_defaults(self):
        """Test default settings."""
        settings = Settings()
        assert settings.output_dir == Path("ncres-out")
        assert settings.log_level == "WARNING"
        assert settings.default_format == OutputFormat.TABLE
        assert settings.samples == DEFAULT_SAMPLES
        assert settings.brute_force_max_r == 12

    def test_output_format_values(self):
        """Test output format enum values."""
        assert OutputFormat("json") is OutputFormat.JSON
        assert OutputFormat.DOT.value == "dot"


class TestGetConfigPath:
    """Tests for config path resolution."""

    def test_default(self, monkeypatch: pytest.MonkeyPatch):
        """Test default config path."""
        monkeypatch.delenv("NCRES_CONFIG_FILE", raising=False)
        assert get_config_path() == Path.home() / ".config" / "ncres" / "config.ini"

    def test_custom(self, monkeypatch: pytest.MonkeyPatch):
        """Test custom config path from env var."""
        monkeypatch.setenv("NCRES_CONFIG_FILE", "/custom/path/config.ini")
        assert get_config_path() == Path("/custom/path/config.ini")


class TestLoadSettings:
    """Tests for load_settings."""

    def test_missing_file(self, isolated_env: Path):
        """Test defaults when the file is empty."""
        settings = load_settings()
        assert settings == Settings()

    def test_sample_file(self, sample_config_file: Path, monkeypatch: pytest.MonkeyPatch):
        """Test values from the config file."""
        monkeypatch.delenv("NCRES_OUTPUT_DIR", raising=False)
        monkeypatch.delenv("NCRES_LOG_LEVEL", raising=False)
        settings = load_settings(sample_config_file)
        assert settings.output_dir == Path("./reports")
        assert settings.log_level == "INFO"
        assert settings.default_format == OutputFormat.JSON
        assert settings.samples == (3, 5, 7)
        assert settings.brute_force_max_r == 8
        assert settings.su3_level_cap == 2

    def test_env_overrides(self, sample_config_file: Path, monkeypatch: pytest.MonkeyPatch):
        """Test environment variables win over the file."""
        monkeypatch.setenv("NCRES_OUTPUT_DIR", "/tmp/ncres-env")
        monkeypatch.setenv("NCRES_LOG_LEVEL", "debug")
        settings = load_settings(sample_config_file)
        assert settings.output_dir == Path("/tmp/ncres-env")
        assert settings.log_level == "DEBUG"

    def test_bad_log_level(self, isolated_env: Path, monkeypatch: pytest.MonkeyPatch):
        """Test an unknown log level is rejected."""
        monkeypatch.setenv("NCRES_LOG_LEVEL", "loud")
        with pytest.raises(ParameterError):
            load_settings()

    @pytest.mark.parametrize("line", [
        "format = yaml",
        "samples = 0",
        "samples = two three",
        "brute_force_max_r = many",
    ])
    def test_bad_values(self, temp_config_dir: Path, line: str):
        """Test malformed config values."""
        path = temp_config_dir / "bad.ini"
        path.write_text(f"[ncres]\n{line}\n")
        with pytest.raises(ParameterError):
            load_settings(path)

    def test_other_sections_ignored(self, temp_config_dir: Path, monkeypatch: pytest.MonkeyPatch):
        """Test a file without an [ncres] section."""
        monkeypatch.delenv("NCRES_OUTPUT_DIR", raising=False)
        monkeypatch.delenv("NCRES_LOG_LEVEL", raising=False)
        path = temp_config_dir / "other.ini"
        path.write_text("[other]\nlog_level = debug\n")
        assert load_settings(path) == Settings()
