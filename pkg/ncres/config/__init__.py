"""Settings models and parsing."""

from ncres.config.models import CheckStatus, OutputFormat, Settings
from ncres.config.parser import get_config_path, load_settings

__all__ = [
    "CheckStatus",
    "OutputFormat",
    "Settings",
    "get_config_path",
    "load_settings",
]
