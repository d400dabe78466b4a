"""Data models for settings and report vocabulary."""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Tuple


class OutputFormat(str, Enum):
    """How a report is rendered."""
    TABLE = "table"
    JSON = "json"
    DOT = "dot"


class CheckStatus(str, Enum):
    """Outcome of a single verification check."""
    PASS = "pass"
    FAIL = "fail"
    ASSUMED = "assumed"

    @property
    def symbol(self) -> str:
        return {"pass": "✓", "fail": "✗", "assumed": "~"}[self.value]


DEFAULT_SAMPLES: Tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass
class Settings:
    """Resolved runtime settings."""
    output_dir: Path = Path("ncres-out")
    log_level: str = "WARNING"
    default_format: OutputFormat = OutputFormat.TABLE
    samples: Tuple[int, ...] = field(default=DEFAULT_SAMPLES)
    brute_force_max_r: int = 12
    su3_level_cap: int = 3
