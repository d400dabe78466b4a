"""Representations of quiver algebras over exact scalars."""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import sympy
from sympy import ImmutableMatrix, Matrix

from ncres.algebra.quiver import Path, QuiverAlgebra, Quiver, Relation
from ncres.algebra.scalars import Scalar, is_zero, matrix_is_zero, nullspace, row_rank
from ncres.errors import CapabilityError, DomainError, ParameterError, ShapeError
from ncres.log import get_logger

logger = get_logger(__name__)

Line = Tuple[int, int]


@dataclass(frozen=True)
class Representation:
    """A dimension vector plus one ``d_head x d_tail`` matrix per arrow."""
    algebra: QuiverAlgebra
    dims: Tuple[int, ...]
    matrices: Tuple[ImmutableMatrix, ...]

    def __post_init__(self) -> None:
        quiver = self.algebra.quiver
        if len(self.dims) != quiver.num_vertices:
            raise ShapeError(f"dimension vector has length {len(self.dims)}, expected {quiver.num_vertices}")
        if any(d < 0 for d in self.dims):
            raise ShapeError("dimensions must be non-negative")
        if len(self.matrices) != len(quiver.arrows):
            raise ShapeError(f"{len(self.matrices)} matrices for {len(quiver.arrows)} arrows")
        for arrow, m in zip(quiver.arrows, self.matrices):
            if m.shape != (self.dims[arrow.head], self.dims[arrow.tail]):
                raise ShapeError(
                    f"arrow {arrow.name} has shape {m.shape}, "
                    f"expected {(self.dims[arrow.head], self.dims[arrow.tail])}"
                )

    @classmethod
    def from_matrices(
        cls,
        algebra: QuiverAlgebra,
        matrices: Mapping[str, Union[Matrix, Sequence]],
        dims: Optional[Sequence[int]] = None,
    ) -> "Representation":
        """Build from arrow-name -> matrix; missing arrows are zero."""
        dims = tuple(algebra.dimension_vector if dims is None else dims)
        quiver = algebra.quiver
        unknown = set(matrices) - {a.name for a in quiver.arrows}
        if unknown:
            raise ParameterError(f"unknown arrows {sorted(unknown)}")
        mats = []
        for arrow in quiver.arrows:
            shape = (dims[arrow.head], dims[arrow.tail])
            given = matrices.get(arrow.name)
            mats.append(ImmutableMatrix(given) if given is not None else ImmutableMatrix.zeros(*shape))
        return cls(algebra, dims, tuple(mats))

    @classmethod
    def thin(cls, algebra: QuiverAlgebra, values: Mapping[str, Scalar]) -> "Representation":
        """Thin representation with the given arrow scalars; missing arrows are zero."""
        dims = (1,) * algebra.quiver.num_vertices
        return cls.from_matrices(algebra, {k: [[sympy.sympify(v)]] for k, v in values.items()}, dims)

    @classmethod
    def vertex_simple(cls, algebra: QuiverAlgebra, vertex: int) -> "Representation":
        """S_vertex: one dimension at ``vertex``, every arrow zero."""
        dims = tuple(1 if v == vertex else 0 for v in algebra.quiver.vertices)
        return cls.from_matrices(algebra, {}, dims)

    @property
    def quiver(self) -> Quiver:
        return self.algebra.quiver

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_thin(self) -> bool:
        return all(d <= 1 for d in self.dims)

    @cached_property
    def free_symbols(self) -> frozenset:
        syms = set()
        for m in self.matrices:
            syms |= m.free_symbols
        return frozenset(syms)

    @property
    def is_numeric(self) -> bool:
        return not self.free_symbols

    def matrix(self, name: str) -> ImmutableMatrix:
        return self.matrices[self.quiver.arrow(name).id]

    def value(self, name: str) -> sympy.Expr:
        """The scalar of a thin arrow (zero when an endpoint has dimension 0)."""
        m = self.matrix(name)
        if 0 in m.shape:
            return sympy.Integer(0)
        if m.shape != (1, 1):
            raise ShapeError(f"arrow {name} is not a 1x1 block")
        return m[0, 0]

    def support_ids(self) -> frozenset:
        """Arrows whose matrix is not identically zero."""
        return frozenset(a.id for a, m in zip(self.quiver.arrows, self.matrices) if not matrix_is_zero(m))

    def subs(self, point: Mapping) -> "Representation":
        mats = tuple(ImmutableMatrix(m.subs(point).applyfunc(sympy.cancel)) for m in self.matrices)
        return Representation(self.algebra, self.dims, mats)


def direct_sum(left: Representation, right: Representation) -> Representation:
    if left.algebra is not right.algebra and left.algebra != right.algebra:
        raise ShapeError("direct sum of representations of different algebras")
    dims = tuple(a + b for a, b in zip(left.dims, right.dims))
    mats = []
    for a, b in zip(left.matrices, right.matrices):
        block = Matrix.zeros(a.rows + b.rows, a.cols + b.cols)
        block[:a.rows, :a.cols] = a
        block[a.rows:, a.cols:] = b
        mats.append(ImmutableMatrix(block))
    mats = tuple(mats)
    return Representation(left.algebra, dims, mats)


def gauge(rep: Representation, g: Sequence[Union[Scalar, Matrix]]) -> Representation:
    """``g_head * rho(a) * g_tail^{-1}`` for invertible per-vertex ``g``."""
    blocks = [Matrix(x) if isinstance(x, (Matrix, ImmutableMatrix)) else sympy.eye(d) * sympy.sympify(x)
              for x, d in zip(g, rep.dims)]
    mats = tuple(
        ImmutableMatrix((blocks[a.head] * m * blocks[a.tail].inv()).applyfunc(sympy.cancel))
        if m.rows and m.cols else m
        for a, m in zip(rep.quiver.arrows, rep.matrices)
    )
    return Representation(rep.algebra, rep.dims, mats)


def evaluate_path(rep: Representation, p: Path) -> Matrix:
    """Matrices multiplied right to left; ``e_i`` is the identity."""
    if p.is_trivial:
        return sympy.eye(rep.dims[p.tail])
    result = Matrix(rep.matrices[p.arrows[0]])
    for aid in p.arrows[1:]:
        result = result * rep.matrices[aid]
    return result.applyfunc(sympy.expand)


def relation_value(rep: Representation, relation: Relation) -> Matrix:
    total = sympy.zeros(rep.dims[relation.head], rep.dims[relation.tail])
    for coef, p in relation.terms:
        total += coef * evaluate_path(rep, p)
    return total


def check_relations(rep: Representation) -> List[Relation]:
    """The relations that do not evaluate to zero."""
    violated = [rel for rel in rep.algebra.relations if not matrix_is_zero(relation_value(rep, rel))]
    if violated:
        logger.debug("%d of %d relations violated", len(violated), len(rep.algebra.relations))
    return violated


@dataclass(frozen=True)
class SocleTopReport:
    socle: Dict[int, int]
    top: Dict[int, int]

    def socle_dim(self) -> int:
        return sum(self.socle.values())

    def top_dim(self) -> int:
        return sum(self.top.values())


def socle_top(rep: Representation) -> SocleTopReport:
    """Socle and top with radical equal to the arrow ideal.

    Symbolic entries are treated generically.
    """
    socle: Dict[int, int] = {}
    top: Dict[int, int] = {}
    for v in rep.quiver.vertices:
        d = rep.dims[v]
        if d == 0:
            continue
        outs = [rep.matrices[a.id] for a in rep.quiver.arrows_from(v) if rep.dims[a.head]]
        ins = [rep.matrices[a.id] for a in rep.quiver.arrows_into(v) if rep.dims[a.tail]]
        kernel = d - (row_rank(Matrix.vstack(*outs)) if outs else 0)
        cokernel = d - (row_rank(Matrix.hstack(*ins)) if ins else 0)
        if kernel:
            socle[v] = kernel
        if cokernel:
            top[v] = cokernel
    return SocleTopReport(socle, top)


def generated_dims(rep: Representation, vertex: int, vector: Matrix) -> Tuple[int, ...]:
    """Dimension vector of the subrepresentation generated by ``vector`` at ``vertex``."""
    spans: Dict[int, Matrix] = {v: Matrix.zeros(rep.dims[v], 0) for v in rep.quiver.vertices}
    queue = [(vertex, Matrix(vector))]
    while queue:
        v, vec = queue.pop()
        if all(is_zero(e) for e in vec):
            continue
        grown = Matrix.hstack(spans[v], vec)
        if row_rank(grown) == spans[v].cols:
            continue
        spans[v] = grown
        for arrow in rep.quiver.arrows_from(v):
            if rep.dims[arrow.head]:
                queue.append((arrow.head, rep.matrices[arrow.id] * vec))
    return tuple(spans[v].cols for v in rep.quiver.vertices)


def is_simple(rep: Representation) -> bool:
    """Every coordinate basis vector generates the whole module."""
    if not rep.is_numeric:
        raise DomainError("is_simple needs a numeric representation; evaluate the parameters first")
    if rep.total_dim == 0:
        return False
    for v in rep.quiver.vertices:
        for i in range(rep.dims[v]):
            vec = Matrix.zeros(rep.dims[v], 1)
            vec[i] = 1
            if generated_dims(rep, v, vec) != rep.dims:
                return False
    return True


def support_strongly_connected(rep: Representation) -> bool:
    """Thin-rep simplicity criterion: the support is strongly connected on supported vertices."""
    vertices = [v for v in rep.quiver.vertices if rep.dims[v]]
    graph = rep.quiver.to_networkx(rep.support_ids()).subgraph(vertices)
    return bool(vertices) and nx.is_strongly_connected(graph)


@dataclass(frozen=True)
class LineArrow:
    """Nonzero entry ``(row, col)`` of an arrow matrix: line (tail, col) -> line (head, row)."""
    arrow: int
    row: int
    col: int


@dataclass(frozen=True)
class PulledApart:
    """One vertex per basis line, one arrow per nonzero matrix entry."""
    algebra: QuiverAlgebra
    dims: Tuple[int, ...]
    line_arrows: Tuple[LineArrow, ...]

    @cached_property
    def lines(self) -> Tuple[Line, ...]:
        return tuple((v, i) for v in self.algebra.quiver.vertices for i in range(self.dims[v]))

    @cached_property
    def line_index(self) -> Dict[Line, int]:
        return {line: k for k, line in enumerate(self.lines)}

    def tail(self, la: LineArrow) -> Line:
        return (self.algebra.quiver.arrows[la.arrow].tail, la.col)

    def head(self, la: LineArrow) -> Line:
        return (self.algebra.quiver.arrows[la.arrow].head, la.row)

    def name(self, la: LineArrow) -> str:
        arrow = self.algebra.quiver.arrows[la.arrow]
        if self.dims[arrow.head] == 1 and self.dims[arrow.tail] == 1:
            return arrow.name
        return f"{arrow.name}[{la.row},{la.col}]"

    def to_quiver(self) -> Tuple[Quiver, Dict[int, int]]:
        """The pulled-apart quiver and its map line-vertex -> original vertex."""
        triples = [(self.name(la), self.line_index[self.tail(la)], self.line_index[self.head(la)])
                   for la in self.line_arrows]
        block = {k: line[0] for k, line in enumerate(self.lines)}
        return Quiver.from_triples(len(self.lines), triples), block

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.lines)
        for k, la in enumerate(self.line_arrows):
            graph.add_edge(self.tail(la), self.head(la), key=k, name=self.name(la))
        return graph

    def support_ids(self) -> frozenset:
        return frozenset(la.arrow for la in self.line_arrows)


def pulled_apart(rep: Representation) -> PulledApart:
    entries = []
    for arrow, m in zip(rep.quiver.arrows, rep.matrices):
        for row, col in product(range(m.rows), range(m.cols)):
            if not is_zero(m[row, col]):
                entries.append(LineArrow(arrow.id, row, col))
    return PulledApart(rep.algebra, rep.dims, tuple(entries))


def line_values(rep: Representation, support: PulledApart) -> Dict[int, sympy.Expr]:
    """Entries of ``rep`` on the line arrows of ``support``, by position."""
    return {k: rep.matrices[la.arrow][la.row, la.col] for k, la in enumerate(support.line_arrows)}


def _thin_iso(left: Representation, right: Representation) -> Optional[Tuple[Matrix, ...]]:
    support = left.support_ids()
    if support != right.support_ids():
        return None
    quiver = left.quiver
    graph = nx.Graph()
    graph.add_nodes_from(v for v in quiver.vertices if left.dims[v])
    for aid in support:
        a = quiver.arrows[aid]
        graph.add_edge(a.tail, a.head)
    g: Dict[int, sympy.Expr] = {}
    for component in nx.connected_components(graph):
        root = min(component)
        g[root] = sympy.Integer(1)
        for u, w in nx.bfs_edges(graph, root):
            # an arrow between u and w fixes g[w] from g[u]
            aid = next(i for i in sorted(support) if {quiver.arrows[i].tail, quiver.arrows[i].head} == {u, w})
            a = quiver.arrows[aid]
            ratio = right.matrices[aid][0, 0] / left.matrices[aid][0, 0]
            g[w] = sympy.cancel(g[u] * ratio if a.tail == u else g[u] / ratio)
    for aid in support:
        a = quiver.arrows[aid]
        if not is_zero(g[a.head] * left.matrices[aid][0, 0] - right.matrices[aid][0, 0] * g[a.tail]):
            return None
    return tuple(Matrix([[g[v]]]) if left.dims[v] else Matrix.zeros(0, 0) for v in quiver.vertices)


def intertwiner_basis(left: Representation, right: Representation) -> List[Tuple[Matrix, ...]]:
    """Basis of ``{g : g_h left(a) = right(a) g_t for every arrow a}``."""
    dims = left.dims
    offsets = []
    total = 0
    for d in dims:
        offsets.append(total)
        total += d * d
    unknowns = sympy.symbols(f"g0:{total}") if total else ()

    def block(v: int, vec=None) -> Matrix:
        d = dims[v]
        src = unknowns if vec is None else list(vec)
        return Matrix(d, d, [src[offsets[v] + k] for k in range(d * d)])

    equations = []
    for a, mleft, mright in zip(left.quiver.arrows, left.matrices, right.matrices):
        if not (dims[a.head] and dims[a.tail]):
            continue
        diff = block(a.head) * mleft - mright * block(a.tail)
        equations.extend(diff)
    if not total:
        return []
    system = sympy.linear_eq_to_matrix(equations, unknowns)[0] if equations else Matrix.zeros(0, total)
    basis = nullspace(system)
    logger.debug("intertwiner space has dimension %d", len(basis))
    return [tuple(block(v, vec) for v in left.quiver.vertices) for vec in basis]


def _det_product(blocks: Sequence[Matrix]) -> sympy.Expr:
    value = sympy.Integer(1)
    for b in blocks:
        if b.rows:
            value *= b.det(method="berkowitz")
    return sympy.cancel(value)


def _combine(basis: Sequence[Tuple[Matrix, ...]], coeffs: Sequence[Scalar]) -> Tuple[Matrix, ...]:
    out = []
    for v in range(len(basis[0])):
        acc = Matrix.zeros(*basis[0][v].shape)
        for c, vec in zip(coeffs, basis):
            acc += c * vec[v]
        out.append(acc.applyfunc(sympy.cancel))
    return tuple(out)


def iso_test(
    left: Representation,
    right: Representation,
    samples: Sequence[int] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47),
) -> Optional[Tuple[Matrix, ...]]:
    """An invertible intertwiner ``left -> right``, or None when they are not isomorphic."""
    if left.dims != right.dims:
        raise ShapeError(f"dimension vectors differ: {left.dims} vs {right.dims}")
    if left.is_thin and right.is_thin and left.is_numeric and right.is_numeric:
        return _thin_iso(left, right)
    basis = intertwiner_basis(left, right)
    if not basis:
        return None if left.total_dim else tuple(Matrix.zeros(0, 0) for _ in left.dims)
    k = len(basis)
    for offset in (0, 1):
        coeffs = [samples[(offset + 2 * i) % len(samples)] for i in range(k)]
        candidate = _combine(basis, coeffs)
        if not is_zero(_det_product(candidate)):
            return candidate
    cs = sympy.symbols(f"c0:{k}")
    generic = _det_product(_combine(basis, cs))
    if is_zero(generic):
        return None
    for coeffs in product(range(-2, 3), repeat=min(k, 4)):
        full = list(coeffs) + [1] * (k - len(coeffs))
        candidate = _combine(basis, full)
        if not is_zero(_det_product(candidate)):
            return candidate
    raise CapabilityError("an invertible intertwiner exists but no sample point found one")


def isomorphic(left: Representation, right: Representation) -> bool:
    return iso_test(left, right) is not None
