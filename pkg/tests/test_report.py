"""Tests for verification reports."""

import json

from ncres.config.models import CheckStatus
from ncres.errors import InconsistencyError
from ncres.harness.report import VerificationReport


def _boom():
    raise InconsistencyError("no intertwiner")


class TestVerificationReport:
    """Tests for VerificationReport."""

    def test_empty_report_is_ok(self):
        """Test a report with no checks."""
        report = VerificationReport("empty")
        assert report.ok
        assert report.exit_code == 0

    def test_failure(self):
        """Test a failed check flips the exit code."""
        report = VerificationReport("case")
        report.add("first", True, "fine")
        report.add("second", False, "broken")
        assert not report.ok
        assert report.exit_code == 1
        assert [c.name for c in report.failures] == ["second"]

    def test_assumed_does_not_fail(self):
        """Test assumed rows do not count against the report."""
        report = VerificationReport("case")
        report.assume("maximality", "taken on trust")
        assert report.ok
        assert report.count(CheckStatus.ASSUMED) == 1

    def test_run_records_library_errors(self):
        """Test an error inside a check becomes a failed row."""
        report = VerificationReport("case")
        check = report.run("iso", _boom)
        assert check.status is CheckStatus.FAIL
        assert "InconsistencyError" in check.detail
        assert report.run("ok", lambda: (True, "done")).status is CheckStatus.PASS

    def test_to_json(self):
        """Test the JSON shape."""
        report = VerificationReport("case")
        report.add("first", True)
        report.diagrams["b"] = "digraph b {}\n"
        report.diagrams["a"] = "digraph a {}\n"
        data = json.loads(report.to_json())
        assert data["case"] == "case"
        assert data["ok"] is True
        assert data["checks"] == [{"name": "first", "status": "pass", "detail": ""}]
        assert data["diagrams"] == ["a", "b"]

    def test_to_dot_in_name_order(self):
        """Test diagrams are joined by name."""
        report = VerificationReport("case")
        report.diagrams["z"] = "digraph z {}"
        report.diagrams["a"] = "digraph a {}"
        assert report.to_dot() == "digraph a {}\ndigraph z {}"

    def test_status_symbols(self):
        """Test the table symbols."""
        assert CheckStatus.PASS.symbol == "✓"
        assert CheckStatus.FAIL.symbol == "✗"
