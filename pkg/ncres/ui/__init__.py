"""User interface components for interactive prompts and display."""

from ncres.ui.display import display_catalog_table, display_report
from ncres.ui.prompts import confirm_action, select_case

__all__ = [
    "confirm_action",
    "display_catalog_table",
    "display_report",
    "select_case",
]
