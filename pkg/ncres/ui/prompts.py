"""Interactive prompts for user input."""

from typing import List, Optional

import questionary
from questionary import Style

from ncres.catalog.builders import CatalogEntry


case_style = Style([
    ("qmark", "fg:magenta bold"),
    ("question", "bold"),
    ("answer", "fg:green bold"),
    ("pointer", "fg:magenta bold"),
    ("highlighted", "fg:magenta bold"),
    ("separator", "fg:grey italic"),
])


def case_group(case: str) -> str:
    """Family heading for a case id: D4, D5 and E6 are preprojective, others use their prefix."""
    if case[0] in "DE" and case[1:].isdigit():
        return "preprojective"
    return case.split("-")[0]


def select_case(entries: List[CatalogEntry], default: Optional[str] = None) -> Optional[str]:
    """Catalog picker with one heading per family.

    Returns the selected case id or None if cancelled.
    """
    if not entries:
        return None

    width = max(len(entry.case) for entry in entries) + 2
    choices = []
    group = None
    for entry in entries:
        if case_group(entry.case) != group:
            group = case_group(entry.case)
            choices.append(questionary.Separator(f"-- {group} --"))
        choices.append(questionary.Choice(title=f"{entry.case:<{width}}{entry.description}", value=entry.case))

    return questionary.select(
        "Select a case to verify:",
        choices=choices,
        default=default,
        style=case_style,
        use_arrow_keys=True,
    ).ask()


def confirm_action(message: str, default: bool = False) -> bool:
    """Yes/no question; a cancelled prompt counts as no."""
    return bool(questionary.confirm(message, default=default, style=case_style).ask())
