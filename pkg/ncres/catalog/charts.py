"""Built-in P^1 charts of the D and E6 preprojective algebras.

Each chart is drawn as a pulled-apart quiver whose arrows carry ``s``,
``t``, ``-s-t`` or nothing. Unlabelled arrows are +1 or -1. The signs are
found once per chart by elimination over GF(2): grouped by monomial in
(s, t), every relation entry must be a difference of two sign products.

For a vertex ``v`` of dimension 2 in the D case, ``(v, 0)`` is the top row
of the drawing and ``(v, 1)`` the bottom row.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy
from sympy import Matrix, Symbol
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from ncres.algebra.quiver import QuiverAlgebra
from ncres.catalog.builders import dynkin_edges, parse_preprojective_kind, preprojective_algebra
from ncres.errors import CapabilityError, InconsistencyError, ParameterError
from ncres.log import get_logger
from ncres.modules.families import FamilyChart, evaluate_chart
from ncres.modules.representation import (
    Line,
    LineArrow,
    PulledApart,
    Representation,
    check_relations,
    relation_value,
)

logger = get_logger(__name__)

# (tail line, head line, kind); kind is "", "s", "t" or "-s-t"
Drawing = List[Tuple[Line, Line, str]]


@dataclass(frozen=True)
class IntersectionRow:
    """Removing the ``left_kind`` arrows of chart ``left`` leaves the same support
    as removing the ``right_kind`` arrows of chart ``right``.

    Charts are named by their shrink-target vertex. ``name`` is the Dynkin edge
    whose curve is the intersection.
    """
    name: str
    left: int
    left_kind: str
    right: int
    right_kind: str


def kind_label(kind: str, chart: int) -> str:
    """``"s"`` on chart 3 -> ``"s_3"``; unlabelled arrows stay ``""``."""
    if kind == "-s-t":
        return f"-s_{chart}-t_{chart}"
    return f"{kind}_{chart}" if kind else ""


def _d_drawing(n: int, j: int) -> Drawing:
    """Chart ``j`` of D(n+2), 1 <= j <= n+2."""
    top, bottom = 0, 1
    arrows: Drawing = [((2, top), (0, 0), "")]
    arrows += [((v, top), (v - 1, top), "") for v in range(3, n + 1)]
    arrows.append(((n + 2, 0), (n, top), "t" if j == n + 2 else ""))
    if j == 1:
        arrows.append(((1, 0), (2, bottom), "t"))
        arrows.append(((1, 0), (2, top), "s"))
    else:
        arrows.append(((2, bottom), (1, 0), "s" if j == 2 else ""))
        arrows.append(((1, 0), (2, top), ""))
    for v in range(3, min(j, n) + 1):
        arrows.append(((v, bottom), (v - 1, bottom), "s" if v == j else ""))
    for v in range(2, min(j, n - 1) + 1):
        arrows.append(((v, bottom), (v + 1, top), "s" if v == j else ""))
    for v in range(max(j, 2), n):
        arrows.append(((v, bottom), (v + 1, bottom), "t" if v == j else ""))
    if j <= n:
        arrows.append(((n, bottom), (n + 1, 0), "t" if j == n else ""))
        arrows.append(((n, bottom), (n + 2, 0), "-s-t" if j == n else ""))
    elif j == n + 1:
        arrows.append(((n + 1, 0), (n, bottom), "s"))
        arrows.append(((n, bottom), (n + 2, 0), ""))
    else:
        arrows.append(((n + 2, 0), (n, bottom), "s"))
        arrows.append(((n, bottom), (n + 1, 0), ""))
    arrows.append(((n + 1, 0), (n, top), "t" if j == n + 1 else ""))
    return arrows


def _d_rows(n: int) -> List[IntersectionRow]:
    rows = [IntersectionRow(f"a_{j}", j, "t", j + 1, "s") for j in range(1, n + 1)]
    rows.append(IntersectionRow(f"a_{n + 1}", n, "-s-t", n + 2, "s"))
    return rows


# line names of the E6 drawing
_E6_LINES: Dict[str, Line] = {
    "0": (0, 0), "1": (1, 0), "1'": (1, 1), "2": (2, 0), "3": (2, 1), "2'": (2, 2),
    "4": (3, 0), "5": (3, 1), "4'": (4, 0), "5'": (4, 1), "6": (5, 0), "6'": (6, 0),
}

# Q^5 and Q^6 carry s and t on the sibling arrows of the drawing, so that
# the rows a_5 and a_6 hold as equalities of arrow sets.
_E6_DRAWINGS: Dict[int, str] = {
    1: "1'>0 1>2:s 1>3:t 4>6 6>5 4'>6' 6'>5' 5'>2' 2>4 4>3 4'>3 3>5 3>5' 5>2' 2>4' 2'>1'",
    2: "1'>0 2>1:-s-t 1>3 4>6 6>5 4'>6' 6'>5' 5'>2' 2>4:s 4>3 4'>3 3>5 3>5' 5>2' 2>4':t 2'>1'",
    3: "1'>0 2>1 1>3 4>6:t 6>5 4'>6' 6'>5' 5'>2' 4>2:s 4>3:t 4'>3 3>5 3>5' 5>2' 2>4' 2'>1'",
    4: "1'>0 2>1 1>3 4>6 6>5 4'>6':s 6'>5' 5'>2' 2>4 4>3 4'>3:s 3>5 3>5' 5>2' 4'>2:t 2'>1'",
    5: "3>5' 1'>0 2'>1' 2>1 1>3 6>5:t 6>4:s 5>2' 3>5 4>2 4'>6' 6'>5' 5'>2' 4'>3 2>4'",
    6: "6'>5':s 6'>4':t 5'>2' 3>5' 4'>2 4>6 6>5 5>2' 4>3 2>4 3>5 1'>0 2'>1' 2>1 1>3",
}

_E6_ROWS = [
    IntersectionRow("a_1", 1, "s", 2, "-s-t"),
    IntersectionRow("a_3", 3, "s", 2, "s"),
    IntersectionRow("a_4", 4, "t", 2, "t"),
    IntersectionRow("a_5", 3, "t", 5, "s"),
    IntersectionRow("a_6", 4, "s", 6, "t"),
]


def _e6_drawing(j: int) -> Drawing:
    drawing: Drawing = []
    for token in _E6_DRAWINGS[j].split():
        edge, _, kind = token.partition(":")
        tail, head = edge.split(">")
        drawing.append((_E6_LINES[tail], _E6_LINES[head], kind))
    return drawing


def _automorphism(family: str, n: int, socle: int) -> Dict[int, int]:
    """Diagram automorphism taking vertex 0 to ``socle``."""
    count = n + 3 if family == "D" else 7
    identity = {v: v for v in range(count)}
    if family == "E":
        rotation = {0: 5, 5: 6, 6: 0, 1: 3, 3: 4, 4: 1, 2: 2}
        options = {0: identity, 5: rotation, 6: {v: rotation[rotation[v]] for v in range(count)}}
    else:
        swap = dict(identity)
        swap[0], swap[1] = 1, 0
        flip = {0: n + 1, 1: n + 2, n + 1: 0, n + 2: 1}
        flip.update({v: n + 2 - v for v in range(2, n + 1)})
        options = {0: identity, 1: swap, n + 1: flip, n + 2: {v: flip[swap[v]] for v in range(count)}}
    if socle not in options:
        raise ParameterError(
            f"socle {socle} is not admissible for built-in charts; use one of {sorted(options)}"
        )
    return options[socle]


def _base(kind: str, s: Symbol, t: Symbol) -> sympy.Expr:
    return {"": sympy.Integer(1), "s": s, "t": t, "-s-t": -s - t}[kind]


def _arrow_between(algebra: QuiverAlgebra, tail: int, head: int) -> int:
    for arrow in algebra.quiver.arrows_from(tail):
        if arrow.head == head:
            return arrow.id
    raise InconsistencyError(f"no arrow {tail} -> {head} in {algebra.name}")


def _gf2_solve(rows: Sequence[Sequence[int]], count: int) -> List[int]:
    """A solution of the augmented system over GF(2); free bits are 0."""
    if not rows:
        return [0] * count
    reduced, pivots = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(2)).rref()
    if count in pivots:
        raise InconsistencyError("no choice of signs satisfies the relations")
    dense = reduced.to_Matrix()
    solution = [0] * count
    for i, p in enumerate(pivots):
        solution[p] = int(dense[i, count]) % 2
    return solution


def _sign_equations(algebra: QuiverAlgebra, support: PulledApart, bases: Sequence[sympy.Expr],
                    s: Symbol, t: Symbol) -> List[List[int]]:
    units = sympy.symbols(f"u_0:{len(bases)}")
    trial = FamilyChart(algebra, "signs", support, support.lines[0], (s, t),
                        tuple(u * b for u, b in zip(units, bases)))
    rows = []
    for relation in algebra.relations:
        for value in relation_value(trial.representation, relation):
            value = sympy.expand(value)
            if value == 0:
                continue
            groups = defaultdict(list)
            for monom, coeff in sympy.Poly(value, s, t, *units).terms():
                groups[monom[:2]].append((coeff, monom[2:]))
            for terms in groups.values():
                if len(terms) == 1:
                    raise InconsistencyError("a relation term has no partner to cancel against")
                if len(terms) > 2:
                    raise CapabilityError("sign solving handles two-term cancellations only")
                (c1, e1), (c2, e2) = terms
                if abs(c1) != abs(c2):
                    raise InconsistencyError("relation terms differ in magnitude")
                row = [(a + b) % 2 for a, b in zip(e1, e2)]
                row.append(1 if c1 * c2 > 0 else 0)
                rows.append(row)
    return rows


def _build_chart(algebra: QuiverAlgebra, drawing: Drawing, chart_id: int, socle: int) -> FamilyChart:
    s, t = sympy.symbols(f"s_{chart_id} t_{chart_id}")
    placed = []
    for tail, head, kind in drawing:
        arrow = _arrow_between(algebra, tail[0], head[0])
        placed.append((LineArrow(arrow, head[1], tail[1]), kind))
    placed.sort(key=lambda item: (item[0].arrow, item[0].row, item[0].col))
    support = PulledApart(algebra, algebra.dimension_vector, tuple(la for la, _ in placed))
    bases = [_base(kind, s, t) for _, kind in placed]
    signs = _gf2_solve(_sign_equations(algebra, support, bases, s, t), len(bases))
    entries = tuple((-1) ** bit * base for bit, base in zip(signs, bases))
    chart = FamilyChart(
        algebra,
        f"Q^{chart_id}",
        support,
        (socle, 0),
        (s, t),
        entries,
        target_vertex=chart_id,
        labels=tuple(kind_label(kind, chart_id) for _, kind in placed),
    )
    if check_relations(chart.representation):
        raise InconsistencyError(f"chart {chart.name} of {algebra.name} violates the relations")
    return chart


def _drawings(family: str, n: int) -> Dict[int, Drawing]:
    if family == "E":
        return {j: _e6_drawing(j) for j in _E6_DRAWINGS}
    return {j: _d_drawing(n, j) for j in range(1, n + 3)}


@lru_cache(maxsize=None)
def _charts(family: str, n: int, socle: int) -> Tuple[FamilyChart, ...]:
    kind = "E6" if family == "E" else f"D{n + 2}"
    algebra = preprojective_algebra(kind)
    pi = _automorphism(family, n, socle)
    charts = []
    for j, drawing in _drawings(family, n).items():
        moved = [((pi[tail[0]], tail[1]), (pi[head[0]], head[1]), k) for tail, head, k in drawing]
        charts.append(_build_chart(algebra, moved, pi[j], socle))
    logger.debug("built %d charts for %s with socle %d", len(charts), kind, socle)
    return tuple(sorted(charts, key=lambda c: c.target_vertex))


def builtin_family_charts(kind: str, socle: int = 0) -> Tuple[FamilyChart, ...]:
    """One P^1 chart in (s_j, t_j) per exceptional curve, ordered by shrink target."""
    family, n = parse_preprojective_kind(kind)
    return _charts(family, n, socle)


def _rows(family: str, n: int) -> List[IntersectionRow]:
    return list(_E6_ROWS) if family == "E" else _d_rows(n)


def intersection_rows(kind: str, socle: int = 0) -> Tuple[IntersectionRow, ...]:
    """Where neighbouring charts meet, transported to ``socle``."""
    family, n = parse_preprojective_kind(kind)
    pi = _automorphism(family, n, socle)
    _, edges = dynkin_edges(family, n)
    ends = {f"a_{i}": (tail, head) for i, tail, head in edges}
    names = {frozenset(pair): name for name, pair in ends.items()}
    moved = []
    for row in _rows(family, n):
        tail, head = ends[row.name]
        moved.append(IntersectionRow(
            names[frozenset((pi[tail], pi[head]))], pi[row.left], row.left_kind, pi[row.right], row.right_kind
        ))
    return tuple(moved)


def _remaining(chart: FamilyChart, kind: str) -> frozenset:
    tag = kind_label(kind, chart.target_vertex)
    return frozenset(la for la, label in zip(chart.support.line_arrows, chart.labels) if label != tag)


def row_holds(charts: Sequence[FamilyChart], row: IntersectionRow) -> bool:
    """Whether the two charts really share the support the row claims."""
    by_target = {c.target_vertex: c for c in charts}
    left, right = by_target[row.left], by_target[row.right]
    if not left.entry(kind_label(row.left_kind, row.left)) or not right.entry(kind_label(row.right_kind, row.right)):
        return False
    return _remaining(left, row.left_kind) == _remaining(right, row.right_kind)


_VANISHING = {"s": (0, 1), "t": (1, 0), "-s-t": (1, -1)}


def meeting_points(charts: Sequence[FamilyChart], row: IntersectionRow) -> Tuple[Representation, Representation]:
    """The module where the row's coordinate vanishes, as seen from either chart."""
    by_target = {c.target_vertex: c for c in charts}
    return (
        evaluate_chart(by_target[row.left], _VANISHING[row.left_kind]),
        evaluate_chart(by_target[row.right], _VANISHING[row.right_kind]),
    )
