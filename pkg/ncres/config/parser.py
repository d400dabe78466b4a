"""Read settings from the config file and environment."""

import configparser
import os
from pathlib import Path
from typing import Optional

from ncres.config.models import OutputFormat, Settings
from ncres.errors import ParameterError

SECTION = "ncres"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def get_config_path() -> Path:
    """Get path to the ncres config file."""
    return Path(os.environ.get("NCRES_CONFIG_FILE", Path.home() / ".config" / "ncres" / "config.ini"))


def _parse_log_level(value: str, key: str) -> str:
    level = value.strip().upper()
    if level not in LOG_LEVELS:
        raise ParameterError(f"{key}: unknown log level '{value}'")
    return level


def _parse_samples(value: str) -> tuple[int, ...]:
    try:
        samples = tuple(int(v) for v in value.replace(",", " ").split())
    except ValueError:
        raise ParameterError(f"samples: expected integers, got '{value}'") from None
    if not samples or any(s == 0 for s in samples):
        raise ParameterError("samples: need at least one nonzero integer")
    return samples


def _read_file(path: Path, settings: Settings) -> None:
    """Apply the [ncres] section of an INI file.

    Format:
        [ncres]
        output_dir = ./out
        log_level = INFO
        format = json
        samples = 2 3 5 7
        brute_force_max_r = 12
        su3_level_cap = 3
    """
    config = configparser.ConfigParser()
    config.read(path)
    if not config.has_section(SECTION):
        return

    output_dir = config.get(SECTION, "output_dir", fallback=None)
    if output_dir:
        settings.output_dir = Path(output_dir).expanduser()

    log_level = config.get(SECTION, "log_level", fallback=None)
    if log_level:
        settings.log_level = _parse_log_level(log_level, "log_level")

    fmt = config.get(SECTION, "format", fallback=None)
    if fmt:
        try:
            settings.default_format = OutputFormat(fmt.strip().lower())
        except ValueError:
            raise ParameterError(f"format: unknown output format '{fmt}'") from None

    samples = config.get(SECTION, "samples", fallback=None)
    if samples:
        settings.samples = _parse_samples(samples)

    for key in ("brute_force_max_r", "su3_level_cap"):
        try:
            value = config.getint(SECTION, key, fallback=None)
        except ValueError:
            raise ParameterError(f"{key}: expected an integer") from None
        if value is not None:
            setattr(settings, key, value)


def load_settings(path: Optional[Path] = None) -> Settings:
    """Resolve settings: defaults, then the config file, then env overrides."""
    settings = Settings()
    path = path or get_config_path()
    if path.exists():
        _read_file(path, settings)

    env_dir = os.environ.get("NCRES_OUTPUT_DIR")
    if env_dir:
        settings.output_dir = Path(env_dir).expanduser()

    env_level = os.environ.get("NCRES_LOG_LEVEL")
    if env_level:
        settings.log_level = _parse_log_level(env_level, "NCRES_LOG_LEVEL")

    return settings
