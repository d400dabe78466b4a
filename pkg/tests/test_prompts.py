"""Tests for interactive prompts using questionary mocking."""

from unittest.mock import MagicMock, patch

from ncres.catalog.builders import catalog_entries
from ncres.ui.prompts import case_group, confirm_action, select_case


class TestSelectCase:
    """Tests for select_case function."""

    def test_select_case_empty_list(self):
        """Test selecting from an empty catalog returns None."""
        assert select_case([]) is None

    def test_select_case_success(self):
        """Test successful case selection."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_select = MagicMock()
            mock_select.ask.return_value = "cyclic-7-3"
            mock_q.select.return_value = mock_select
            mock_q.Choice = MagicMock(side_effect=lambda title, value: {"title": title, "value": value})

            result = select_case(catalog_entries())

            assert result == "cyclic-7-3"
            mock_q.select.assert_called_once()

    def test_select_case_choices(self):
        """Test every catalog case is offered."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_q.select.return_value.ask.return_value = "conifold"
            mock_q.Choice = MagicMock(side_effect=lambda title, value: {"title": title, "value": value})

            select_case(catalog_entries())

            choices = mock_q.select.call_args.kwargs["choices"]
            cases = [c for c in choices if isinstance(c, dict)]
            assert [c["value"] for c in cases] == [e.case for e in catalog_entries()]
            assert cases[0]["title"].startswith("conifold")

    def test_select_case_headings(self):
        """Test one separator per case family, in catalog order."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_q.Choice = MagicMock(side_effect=lambda title, value: {"title": title, "value": value})

            select_case(catalog_entries())

            headings = [c.args[0] for c in mock_q.Separator.call_args_list]
            assert headings == [
                "-- conifold --", "-- su3 --", "-- tautological --", "-- cyclic --", "-- preprojective --",
            ]

    def test_select_case_cancelled(self):
        """Test cancelled selection returns None."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_select = MagicMock()
            mock_select.ask.return_value = None  # User pressed Ctrl+C
            mock_q.select.return_value = mock_select
            mock_q.Choice = MagicMock(side_effect=lambda title, value: {"title": title, "value": value})

            assert select_case(catalog_entries()) is None


class TestCaseGroup:
    """Tests for case_group."""

    def test_groups(self):
        """Test family headings for case ids."""
        assert case_group("cyclic-7-3") == "cyclic"
        assert case_group("tautological-2") == "tautological"
        assert case_group("E6") == "preprojective"
        assert case_group("D5") == "preprojective"
        assert case_group("su3") == "su3"


class TestConfirmAction:
    """Tests for confirm_action function."""

    def test_confirm_action_yes(self):
        """Test confirming an action."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_confirm = MagicMock()
            mock_confirm.ask.return_value = True
            mock_q.confirm.return_value = mock_confirm

            result = confirm_action("Write into it anyway?")

            assert result is True
            mock_q.confirm.assert_called_once()

    def test_confirm_action_no(self):
        """Test declining an action."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_q.confirm.return_value.ask.return_value = False

            assert confirm_action("Write into it anyway?") is False

    def test_confirm_action_cancelled(self):
        """Test cancelled confirmation returns False."""
        with patch("ncres.ui.prompts.questionary") as mock_q:
            mock_q.confirm.return_value.ask.return_value = None  # Cancelled

            assert confirm_action("Write into it anyway?") is False
