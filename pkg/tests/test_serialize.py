"""Tests for JSON quiver specs, DOT output and exports."""

import json
from pathlib import Path

import pytest

from ncres.algebra.quiver import Subquiver
from ncres.catalog.builders import catalog_entries
from ncres.errors import ParameterError
from ncres.harness.report import VerificationReport
from ncres.harness.serialize import (
    algebra_from_json,
    algebra_to_json,
    chart_label,
    chart_to_dot,
    export_case,
    quiver_to_dot,
    subquiver_to_dot,
)
from ncres.modules.families import trivialize_support


class TestJson:
    """Tests for JSON quiver specs."""

    @pytest.mark.parametrize("case", ["conifold", "cyclic-7-3", "tautological-3", "D4"])
    def test_round_trip(self, case):
        """Test catalog algebras survive a round trip."""
        algebra = next(e for e in catalog_entries() if e.case == case).build()
        again = algebra_from_json(algebra_to_json(algebra))
        assert again == algebra
        assert (again.impression is None) == (algebra.impression is None)

    def test_spec_keys(self, conifold):
        """Test the conifold spec."""
        spec = json.loads(algebra_to_json(conifold))
        assert spec["vertices"] == 2
        assert spec["arrows"][0] == {"name": "a_1", "tail": 0, "head": 1, "label": "x"}
        assert spec["variables"] == ["x", "y", "z", "w"]
        assert spec["center_dim"] == 3

    def test_hand_written(self):
        """Test a minimal hand-written spec."""
        algebra = algebra_from_json(json.dumps({
            "vertices": 1,
            "arrows": [{"name": "x", "tail": 0, "head": 0}],
        }))
        assert algebra.name == "custom"
        assert algebra.relations == ()
        assert algebra.dimension_vector == (1,)

    @pytest.mark.parametrize("text", ["not json", "{}", '{"vertices": 1, "arrows": [{"name": "x"}]}'])
    def test_malformed(self, text):
        """Test broken specs are rejected."""
        with pytest.raises(ParameterError):
            algebra_from_json(text)


class TestDot:
    """Tests for DOT diagrams."""

    def test_quiver(self, conifold):
        """Test one node per vertex and one edge per arrow."""
        dot = quiver_to_dot(conifold)
        assert dot.startswith('digraph "conifold" {')
        assert dot.count("->") == 4
        assert 'v0 [label="1"];' in dot
        assert 'v1 [label="2"];' in dot
        assert dot.rstrip().endswith("}")

    def test_subquiver_dotted(self, conifold):
        """Test arrows outside the support are dotted."""
        support = Subquiver.from_names(conifold.quiver, ["a_1", "a_2"])
        dot = subquiver_to_dot(conifold, support, "socle S_2", "S_2 (x:y)")
        assert dot.count("style=dotted") == 2
        assert 'label="S_2 (x:y)";' in dot

    def test_chart(self, conifold):
        """Test chart diagrams mark the sink and label entries."""
        chart = trivialize_support(conifold, Subquiver.from_names(conifold.quiver, ["a_1", "a_2"]), 1)
        assert chart_label(chart) == "(x:y)"
        dot = chart_to_dot(chart)
        assert 'l1_0 [label="2", shape=doublecircle];' in dot
        assert 'label="a_1: t_1"' in dot
        assert dot.count("->") == 2


class TestExport:
    """Tests for export_case."""

    def test_export(self, conifold, tmp_path: Path):
        """Test the spec, diagrams and report are written."""
        report = VerificationReport("conifold")
        report.add("check", True)
        report.diagrams["conifold-quiver"] = quiver_to_dot(conifold)
        out = tmp_path / "out"
        paths = export_case(conifold, report, out)
        assert [p.name for p in paths] == ["conifold.json", "conifold-quiver.dot", "report.json"]
        assert all(p.exists() for p in paths)
        data = json.loads((out / "report.json").read_text())
        assert data["artifacts"] == [str(p) for p in paths]
        assert algebra_from_json((out / "conifold.json").read_text()) == conifold
