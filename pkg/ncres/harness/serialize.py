"""JSON quiver descriptions and DOT diagrams.

DOT text is assembled line by line and never rendered here. Arrows outside
a support are kept in the picture with ``style=dotted``.
"""

import json
from pathlib import Path
from typing import Dict, List, Optional

import sympy

from ncres.algebra.impression import Impression, family_coordinates
from ncres.algebra.quiver import Quiver, QuiverAlgebra, Relation, Subquiver
from ncres.catalog.builders import case_vertex_map
from ncres.errors import NcresError, ParameterError
from ncres.harness.report import VerificationReport
from ncres.log import get_logger
from ncres.modules.families import FamilyChart

logger = get_logger(__name__)


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def algebra_to_json(algebra: QuiverAlgebra) -> str:
    """The algebra as a JSON quiver description with a stable key order."""
    quiver = algebra.quiver
    arrows = []
    for a in quiver.arrows:
        entry = {"name": a.name, "tail": a.tail, "head": a.head}
        if algebra.impression is not None and algebra.impression.is_thin:
            entry["label"] = str(algebra.impression.label(a.id)[0, 0])
        arrows.append(entry)
    relations = [
        [{"coef": str(coef), "path": [quiver.arrows[i].name for i in p.arrows]} for coef, p in rel.terms]
        for rel in algebra.relations
    ]
    spec = {
        "name": algebra.name,
        "vertices": quiver.num_vertices,
        "arrows": arrows,
        "relations": relations,
        "dimension_vector": list(algebra.dimension_vector),
        "center_dim": algebra.center_dim,
    }
    if algebra.impression is not None and algebra.impression.is_thin:
        spec["variables"] = list(algebra.impression.variables)
    return json.dumps(spec, indent=2, ensure_ascii=False)


def algebra_from_json(text: str) -> QuiverAlgebra:
    """Parse a JSON quiver description written by :func:`algebra_to_json` or by hand."""
    try:
        spec = json.loads(text)
        quiver = Quiver.from_triples(spec["vertices"], [(a["name"], a["tail"], a["head"]) for a in spec["arrows"]])
        relations = tuple(
            Relation(tuple((sympy.Rational(term["coef"]), quiver.path(*term["path"])) for term in rel))
            for rel in spec.get("relations", [])
        )
        dims = tuple(spec.get("dimension_vector", [1] * quiver.num_vertices))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParameterError(f"malformed quiver spec: {exc}") from None
    impression = None
    labels = [a.get("label") for a in spec["arrows"]]
    if all(label is not None for label in labels) and labels:
        impression = Impression.thin(spec.get("variables", []), labels, quiver.num_vertices)
    return QuiverAlgebra(spec.get("name", "custom"), quiver, relations, dims, impression, spec.get("center_dim"))


def _header(name: str, label: Optional[str] = None) -> List[str]:
    lines = [f"digraph {_quote(name)} {{", "    rankdir=LR;", "    node [shape=circle];"]
    if label:
        lines.append(f"    label={_quote(label)};")
    return lines


def _vertex_lines(algebra: QuiverAlgebra) -> List[str]:
    names = case_vertex_map(algebra)
    return [f"    v{v} [label={_quote(names[v])}];" for v in algebra.quiver.vertices]


def quiver_to_dot(algebra: QuiverAlgebra) -> str:
    lines = _header(algebra.name) + _vertex_lines(algebra)
    for a in algebra.quiver.arrows:
        lines.append(f"    v{a.tail} -> v{a.head} [label={_quote(a.name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subquiver_to_dot(algebra: QuiverAlgebra, support: Subquiver, name: Optional[str] = None,
                     label: Optional[str] = None) -> str:
    """Every arrow of the quiver; those outside ``support`` dotted."""
    lines = _header(name or algebra.name, label) + _vertex_lines(algebra)
    for a in algebra.quiver.arrows:
        style = "" if a.id in support.arrows else ", style=dotted"
        lines.append(f"    v{a.tail} -> v{a.head} [label={_quote(a.name)}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chart_label(chart: FamilyChart) -> str:
    """The coordinate ladder when the chart has one, else its parameters."""
    if chart.generating_paths and chart.algebra.impression is not None:
        try:
            return family_coordinates(chart).render()
        except NcresError:
            pass
    return "(" + ":".join(str(t) for t in chart.parameters) + ")"


def chart_to_dot(chart: FamilyChart) -> str:
    """The pulled-apart support, one node per line, edges labelled by their entries."""
    support = chart.support
    names = case_vertex_map(chart.algebra)
    lines = _header(chart.name, f"{chart.name} {chart_label(chart)}")
    for v, i in support.lines:
        text = names[v] if support.dims[v] == 1 else f"{names[v]}.{i}"
        shape = ", shape=doublecircle" if (v, i) == chart.sink else ""
        lines.append(f"    l{v}_{i} [label={_quote(text)}{shape}];")
    for la, entry in zip(support.line_arrows, chart.entries):
        (tv, ti), (hv, hi) = support.tail(la), support.head(la)
        lines.append(f"    l{tv}_{ti} -> l{hv}_{hi} [label={_quote(f'{support.name(la)}: {entry}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _safe(name: str) -> str:
    keep = [c if c.isalnum() or c in "-_" else "_" for c in name]
    return "".join(keep).strip("_") or "diagram"


def export_case(algebra: QuiverAlgebra, report: VerificationReport, out: Path) -> List[Path]:
    """Write the algebra spec, one ``.dot`` per diagram and ``report.json`` into ``out``."""
    out.mkdir(parents=True, exist_ok=True)
    written: Dict[str, Path] = {}
    spec_path = out / f"{_safe(algebra.name)}.json"
    spec_path.write_text(algebra_to_json(algebra) + "\n", encoding="utf-8")
    written["spec"] = spec_path
    for name in sorted(report.diagrams):
        path = out / f"{_safe(name)}.dot"
        path.write_text(report.diagrams[name], encoding="utf-8")
        written[name] = path
    report.artifacts = [str(p) for p in written.values()]
    report_path = out / "report.json"
    report.artifacts.append(str(report_path))
    report_path.write_text(report.to_json() + "\n", encoding="utf-8")
    logger.info("wrote %d file(s) to %s", len(report.artifacts), out)
    return [Path(p) for p in report.artifacts]
