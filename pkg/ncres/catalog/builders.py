"""Builders for the quiver algebras in the catalog.

Vertices are 0-based. Where a figure numbers vertices from 1, vertex ``k``
of the figure is vertex ``k - 1`` here.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, List, Tuple

import sympy

from ncres.algebra.impression import Impression
from ncres.algebra.quiver import Quiver, QuiverAlgebra, Relation
from ncres.errors import ParameterError
from ncres.modules.representation import Representation


def _relations(quiver: Quiver, pairs: List[Tuple[Tuple[str, ...], Tuple[str, ...]]]) -> Tuple[Relation, ...]:
    return tuple(Relation.binomial(quiver.path(*p), quiver.path(*q)) for p, q in pairs)


def tautological_algebra(n: int) -> QuiverAlgebra:
    """Arrows ``a_i: 0 -> 1`` (label ``z_i``) and ``b: 1 -> 0`` (label 1), cycles commuting."""
    if n < 1:
        raise ParameterError("the tautological algebra needs n >= 1")
    triples = [(f"a_{i}", 0, 1) for i in range(1, n + 1)] + [("b", 1, 0)]
    quiver = Quiver.from_triples(2, triples)
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pairs.append(((f"a_{i}", "b", f"a_{j}"), (f"a_{j}", "b", f"a_{i}")))
            pairs.append((("b", f"a_{i}", "b", f"a_{j}"), ("b", f"a_{j}", "b", f"a_{i}")))
    variables = [f"z_{i}" for i in range(1, n + 1)]
    impression = Impression.thin(variables, variables + [1], 2)
    return QuiverAlgebra(f"tautological({n})", quiver, _relations(quiver, pairs), (1, 1), impression, n)


def conifold_algebra() -> QuiverAlgebra:
    """``a_1, a_2: 0 -> 1`` labelled x, y and ``b_1, b_2: 1 -> 0`` labelled z, w."""
    quiver = Quiver.from_triples(2, [("a_1", 0, 1), ("a_2", 0, 1), ("b_1", 1, 0), ("b_2", 1, 0)])
    pairs = []
    for j in (1, 2):
        pairs.append((("a_1", f"b_{j}", "a_2"), ("a_2", f"b_{j}", "a_1")))
    for j in (1, 2):
        pairs.append((("b_1", f"a_{j}", "b_2"), ("b_2", f"a_{j}", "b_1")))
    impression = Impression.thin("xyzw", "xyzw", 2)
    return QuiverAlgebra("conifold", quiver, _relations(quiver, pairs), (1, 1), impression, 3)


def cyclic_mckay_algebra(r: int, b: int) -> QuiverAlgebra:
    """McKay quiver of (1/r)(1, b): ``a_i: i -> i+1``, ``b_i: i -> i+b``, modulo r."""
    if r < 2:
        raise ParameterError("cyclic algebras need r >= 2")
    if not 1 <= b <= r - 1:
        raise ParameterError(f"b must lie in 1..{r - 1}")
    if gcd(r, b) != 1:
        raise ParameterError(f"gcd({r}, {b}) != 1")
    triples = [(f"a_{i}", i, (i + 1) % r) for i in range(r)]
    triples += [(f"b_{i}", i, (i + b) % r) for i in range(r)]
    quiver = Quiver.from_triples(r, triples)
    # b_{i+1} a_i = a_{i+b} b_i, both paths i -> i+1+b
    pairs = [((f"b_{(i + 1) % r}", f"a_{i}"), (f"a_{(i + b) % r}", f"b_{i}")) for i in range(r)]
    impression = Impression.thin("xy", ["x"] * r + ["y"] * r, r)
    return QuiverAlgebra(f"cyclic({r},{b})", quiver, _relations(quiver, pairs), (1,) * r, impression, 2)


def su3_vertex(r: int, x: int, y: int) -> int:
    return (x % r) + r * (y % r)


def abelian_su3_algebra(r: int = 4) -> QuiverAlgebra:
    """McKay quiver of (1/r)(1, 1, r-2) on an r x r torus.

    At grid vertex (x, y): ``a`` goes up, ``b`` goes right, ``c`` goes down-left.
    The arrow leaving (x, y) is named ``<kind>_<x>_<y>``.
    """
    if r < 2:
        raise ParameterError("the su3 algebra needs r >= 2")
    steps = {"a": (0, 1), "b": (1, 0), "c": (-1, -1)}
    triples = []
    for kind, (dx, dy) in steps.items():
        for y in range(r):
            for x in range(r):
                triples.append((f"{kind}_{x}_{y}", su3_vertex(r, x, y), su3_vertex(r, x + dx, y + dy)))
    quiver = Quiver.from_triples(r * r, triples)

    def arrow(kind: str, x: int, y: int) -> str:
        return su3_arrow_name(kind, x, y, r)

    pairs = []
    for y in range(r):
        for x in range(r):
            pairs.append(((arrow("b", x, y + 1), arrow("a", x, y)), (arrow("a", x + 1, y), arrow("b", x, y))))
            pairs.append(((arrow("c", x + 1, y), arrow("b", x, y)), (arrow("b", x - 1, y - 1), arrow("c", x, y))))
            pairs.append(((arrow("a", x - 1, y - 1), arrow("c", x, y)), (arrow("c", x, y + 1), arrow("a", x, y))))
    labels = [kind for kind in "xyz" for _ in range(r * r)]
    impression = Impression.thin("xyz", labels, r * r)
    return QuiverAlgebra(f"su3({r})", quiver, _relations(quiver, pairs), (1,) * (r * r), impression, 3)


def su3_arrow_name(kind: str, x: int, y: int, r: int = 4) -> str:
    return f"{kind}_{x % r}_{y % r}"


_KIND = re.compile(r"^\s*(D)\s*\(?\s*(\d+)\s*\)?\s*$|^\s*E\s*6\s*$", re.IGNORECASE)


def parse_preprojective_kind(kind: str) -> Tuple[str, int]:
    """``"D5"``, ``"D(5)"`` -> ("D", 3); ``"E6"`` -> ("E", 6). For D the number is n of D(n+2)."""
    match = _KIND.match(kind)
    if not match:
        raise ParameterError(f"unknown preprojective kind {kind!r}; use D<k> with k >= 4, or E6")
    if match.group(1) is None:
        return "E", 6
    total = int(match.group(2))
    if total < 4:
        raise ParameterError("D(k) needs k >= 4")
    return "D", total - 2


def dynkin_edges(family: str, n: int) -> Tuple[int, List[Tuple[int, int, int]]]:
    """Vertex count and ``(index, tail, head)`` of the oriented extended Dynkin edges."""
    if family == "E":
        return 7, [(0, 0, 1), (1, 1, 2), (3, 3, 2), (4, 4, 2), (5, 5, 3), (6, 6, 4)]
    edges = [(0, 0, 2), (1, 1, 2)]
    edges += [(i, i, i + 1) for i in range(2, n)]
    edges += [(n, n, n + 1), (n + 1, n, n + 2)]
    return n + 3, edges


def preprojective_algebra(kind: str) -> QuiverAlgebra:
    """Doubled extended Dynkin quiver modulo the vertex components of sum [a, abar]."""
    family, n = parse_preprojective_kind(kind)
    count, edges = dynkin_edges(family, n)
    triples = [(f"a_{i}", t, h) for i, t, h in edges] + [(f"abar_{i}", h, t) for i, t, h in edges]
    quiver = Quiver.from_triples(count, triples)
    relations = []
    for v in quiver.vertices:
        terms = []
        for i, t, h in edges:
            if h == v:
                terms.append((1, quiver.path(f"a_{i}", f"abar_{i}")))
            if t == v:
                terms.append((-1, quiver.path(f"abar_{i}", f"a_{i}")))
        relations.append(Relation(tuple(terms)))
    if family == "E":
        name, dims = "E6", (1, 2, 3, 2, 2, 1, 1)
    else:
        name, dims = f"D{n + 2}", (1, 1) + (2,) * (n - 1) + (1, 1)
    return QuiverAlgebra(name, quiver, tuple(relations), dims, None, 2)


S, T = sympy.symbols("s t")


@dataclass(frozen=True)
class FigureModule:
    """A small path algebra with the generic module drawn in one row of the s,t figure."""
    case: str
    representation: Representation
    sink: Tuple[int, int]

    @property
    def algebra(self) -> QuiverAlgebra:
        return self.representation.algebra


_ST_FIGURES = {
    "i": (3, (1, 2, 1), [("p", 0, 1, [[1], [0]]), ("q", 1, 0, [[0, S]]),
                         ("u", 2, 1, [[1], [0]]), ("v", 1, 2, [[0, T]])], (1, 0)),
    "ii": (3, (1, 2, 1), [("p", 0, 1, [[S], [T]]), ("q", 1, 2, [[1, 1]])], (2, 0)),
    "iii": (4, (1, 1, 1, 2), [("p", 0, 3, [[S], [T]]), ("u", 2, 3, [[0], [1]]),
                              ("v", 3, 2, [[1, 0]]), ("q", 3, 1, [[0, 1]])], (1, 0)),
    "iv": (4, (1, 1, 1, 2), [("p", 0, 3, [[S], [T]]), ("u", 2, 3, [[0], [1]]),
                             ("v", 3, 2, [[1, 0]]), ("q", 1, 3, [[0], [1]])], (3, 1)),
}


def st_figure_module(case: str) -> FigureModule:
    """The generic module of row ``case`` (i, ii, iii or iv) of the s,t figure."""
    try:
        count, dims, arrows, sink = _ST_FIGURES[case]
    except KeyError:
        raise ParameterError(f"unknown s,t figure case {case!r}; use one of {', '.join(_ST_FIGURES)}") from None
    quiver = Quiver.from_triples(count, [(name, t, h) for name, t, h, _ in arrows])
    algebra = QuiverAlgebra(f"st({case})", quiver, (), dims)
    rep = Representation.from_matrices(algebra, {name: m for name, _, _, m in arrows})
    return FigureModule(case, rep, sink)


@dataclass(frozen=True)
class CatalogEntry:
    case: str
    description: str
    build: Callable[[], QuiverAlgebra]


def catalog_entries() -> List[CatalogEntry]:
    """Every buildable case id with a one-line description."""
    entries = [
        CatalogEntry("conifold", "conifold algebra, two P^1 families", conifold_algebra),
        CatalogEntry("su3", "abelian SU(3) orbifold (1/4)(1,1,2)", abelian_su3_algebra),
    ]
    for n in (2, 3, 4, 5):
        entries.append(CatalogEntry(f"tautological-{n}", f"tautological algebra, blowup of C^{n}",
                                    lambda n=n: tautological_algebra(n)))
    for b in range(1, 7):
        entries.append(CatalogEntry(f"cyclic-7-{b}", f"McKay quiver of (1/7)(1,{b})",
                                    lambda b=b: cyclic_mckay_algebra(7, b)))
    for kind in ("D4", "D5", "E6"):
        entries.append(CatalogEntry(kind, f"preprojective algebra of extended {kind}",
                                    lambda kind=kind: preprojective_algebra(kind)))
    return entries


def build_algebra(name: str) -> QuiverAlgebra:
    """Algebra from a name such as ``conifold``, ``cyclic(7,3)``, ``tautological(3)``, ``su3``, ``D5``."""
    text = name.strip().lower().replace(" ", "")
    for entry in catalog_entries():
        if entry.case == text:
            return entry.build()
    match = re.fullmatch(r"cyclic[(\-](\d+)[,\-](\d+)\)?", text)
    if match:
        return cyclic_mckay_algebra(int(match.group(1)), int(match.group(2)))
    match = re.fullmatch(r"tautological[(\-](\d+)\)?", text)
    if match:
        return tautological_algebra(int(match.group(1)))
    match = re.fullmatch(r"su3(?:[(\-](\d+)\)?)?", text)
    if match:
        return abelian_su3_algebra(int(match.group(1) or 4))
    return preprojective_algebra(name)


def case_vertex_map(algebra: QuiverAlgebra) -> Dict[int, str]:
    """Vertex labels as drawn in the figures."""
    if algebra.name.startswith("su3"):
        r = int(algebra.name[4:-1])
        return {su3_vertex(r, x, y): f"({x},{y})" for y in range(r) for x in range(r)}
    if algebra.name == "conifold" or algebra.name.startswith("tautological"):
        return {0: "1", 1: "2"}
    return {v: str(v) for v in algebra.quiver.vertices}
