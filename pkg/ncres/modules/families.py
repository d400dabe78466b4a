"""Parametric family charts, their isomorphism parameters, and shrinking.

A chart is a representation whose entries are polynomials in parameters
``t_1..t_m``, supported on a fixed pulled-apart quiver. Entries are stored
one per line arrow of that quiver.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import sympy
from sympy import ImmutableMatrix, Matrix, Symbol

from ncres.algebra.quiver import Path, QuiverAlgebra, Subquiver
from ncres.algebra.scalars import LAMBDA, is_zero, lambda_valuation, nullspace, row_rank
from ncres.config.models import DEFAULT_SAMPLES
from ncres.errors import (
    CapabilityError,
    InconsistencyError,
    InfeasibleError,
    ParameterError,
    PreconditionError,
    ShapeError,
    SupportError,
)
from ncres.log import get_logger
from ncres.modules.representation import (
    Line,
    LineArrow,
    PulledApart,
    Representation,
    check_relations,
    intertwiner_basis,
    iso_test,
    line_values,
    pulled_apart,
    socle_top,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class PlanStep:
    """One move of the trivialization, replayed by :func:`normalize_to_chart`.

    ``kind`` is ``"normalize"`` (rescale ``line`` so arrow ``pivot`` takes
    ``target``) or ``"free"`` (read parameter values off ``params``).
    """
    kind: str
    line: Line
    pivot: Optional[int] = None
    target: sympy.Expr = sympy.Integer(1)
    params: Tuple[Tuple[int, int], ...] = ()


@dataclass(frozen=True)
class FamilyChart:
    """A parametric representation over a pulled-apart support."""
    algebra: QuiverAlgebra
    name: str
    support: PulledApart
    sink: Line
    parameters: Tuple[Symbol, ...]
    entries: Tuple[sympy.Expr, ...]
    generating_paths: Tuple[Path, ...] = ()
    target_vertex: Optional[int] = None
    labels: Tuple[str, ...] = ()
    plan: Tuple[PlanStep, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.support.line_arrows):
            raise ShapeError("one entry per line arrow is required")

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.support.dims

    @property
    def is_thin(self) -> bool:
        return all(d <= 1 for d in self.dims)

    @property
    def subquiver(self) -> Subquiver:
        return Subquiver(self.algebra.quiver, self.support.support_ids())

    @cached_property
    def representation(self) -> Representation:
        """sigma, with entries in Q[t_1..t_m]."""
        mats = {}
        quiver = self.algebra.quiver
        for a in quiver.arrows:
            mats[a.id] = Matrix.zeros(self.dims[a.head], self.dims[a.tail])
        for la, value in zip(self.support.line_arrows, self.entries):
            mats[la.arrow][la.row, la.col] = value
        return Representation(self.algebra, self.dims, tuple(ImmutableMatrix(mats[a.id]) for a in quiver.arrows))

    def entry(self, label: str) -> List[int]:
        """Indices of the line arrows carrying ``label``."""
        return [k for k, lab in enumerate(self.labels) if lab == label]


def generic_point(chart: FamilyChart, offset: int = 0, samples: Sequence[int] = DEFAULT_SAMPLES) -> Dict[Symbol, int]:
    """Deterministic primes for the parameters, shifted by ``offset``."""
    return {t: samples[(offset + k) % len(samples)] for k, t in enumerate(chart.parameters)}


def evaluate_chart(chart: FamilyChart, point: Union[Mapping, Sequence]) -> Representation:
    """sigma(z) as a numeric representation."""
    if not isinstance(point, Mapping):
        if len(point) != len(chart.parameters):
            raise ParameterError(f"expected {len(chart.parameters)} parameter values, got {len(point)}")
        point = dict(zip(chart.parameters, point))
    return chart.representation.subs({sympy.sympify(k) if isinstance(k, str) else k: v for k, v in point.items()})


def _as_pulled_apart(algebra: QuiverAlgebra, support: Union[Subquiver, PulledApart]) -> PulledApart:
    if isinstance(support, PulledApart):
        return support
    if not algebra.is_thin:
        raise ParameterError(f"{algebra.name} is not thin; pass a pulled-apart support")
    lines = tuple(LineArrow(a, 0, 0) for a in sorted(support.arrows))
    return PulledApart(algebra, algebra.dimension_vector, lines)


def _as_line(support: PulledApart, sink: Union[int, Line]) -> Line:
    if isinstance(sink, tuple):
        line = sink
    elif support.dims[sink] == 1:
        line = (sink, 0)
    else:
        raise ParameterError(f"vertex {sink} has dimension {support.dims[sink]}; give the sink as a line")
    if line not in support.line_index:
        raise ParameterError(f"{line} is not a line of the support")
    return line


def _line_binomials(support: PulledApart) -> List[Tuple[Counter, Counter, sympy.Rational]]:
    """Entries of the relations over the line quiver, as binomials ``x^m1 = c x^m2``."""
    quiver = support.algebra.quiver
    by_start: Dict[Tuple[Line, int], List[Tuple[int, Line]]] = defaultdict(list)
    for k, la in enumerate(support.line_arrows):
        by_start[(support.tail(la), la.arrow)].append((k, support.head(la)))
    found = []
    for rel in support.algebra.relations:
        for col in range(support.dims[rel.tail]):
            totals: Dict[Line, Dict[Tuple[int, ...], sympy.Rational]] = defaultdict(lambda: defaultdict(int))
            for coef, path in rel.terms:
                walks = [((rel.tail, col), ())]
                for aid in path.travelled():
                    walks = [(head, used + (k,)) for line, used in walks for k, head in by_start[(line, aid)]]
                for end, used in walks:
                    totals[end][tuple(sorted(used))] += coef
            for end, monos in totals.items():
                terms = [(m, c) for m, c in monos.items() if c != 0]
                if not terms:
                    continue
                if len(terms) == 1:
                    names = ", ".join(support.name(support.line_arrows[k]) for k in terms[0][0])
                    raise InfeasibleError(
                        f"relation {rel.render(quiver)} forces the product of {names} to vanish on this support"
                    )
                if len(terms) > 2:
                    raise CapabilityError(
                        f"relation {rel.render(quiver)} has {len(terms)} nonzero terms between lines "
                        f"{(rel.tail, col)} and {end}"
                    )
                (m1, c1), (m2, c2) = terms
                found.append((Counter(m1), Counter(m2), sympy.Rational(-c2, 1) / c1))
    return found


class _Trivializer:
    """Normalizes arrows line by line, from the sink outwards."""

    def __init__(self, support: PulledApart, sink: Line):
        self.support = support
        self.sink = sink
        self.count = len(support.line_arrows)
        self.tails = [support.tail(la) for la in support.line_arrows]
        self.heads = [support.head(la) for la in support.line_arrows]
        rows, constants = [], []
        for m1, m2, c in _line_binomials(support):
            row = [m1.get(k, 0) - m2.get(k, 0) for k in range(self.count)]
            if not any(row):
                if c != 1:
                    raise InfeasibleError("a relation forces two equal monomials to differ")
                continue
            rows.append(row)
            constants.append(c)
        self.matrix = Matrix(rows) if rows else Matrix.zeros(0, self.count)
        self.constants = constants
        self.values: Dict[int, sympy.Expr] = {}
        self.params: List[Symbol] = []
        self.plan: List[PlanStep] = []
        logger.debug("trivializing %d line arrows under %d binomial rows", self.count, len(rows))

    def out_arrows(self, line: Line) -> List[int]:
        return [k for k in range(self.count) if self.tails[k] == line]

    def in_arrows(self, line: Line) -> List[int]:
        return [k for k in range(self.count) if self.heads[k] == line]

    def determine(self, target: Sequence[int]) -> Optional[sympy.Expr]:
        """``x^target`` in terms of the parameters, when the relations fix it."""
        free = [k for k in range(self.count) if k not in self.values]
        if self.matrix.rows == 0 or not free:
            weights = Matrix.zeros(self.matrix.rows, 1)
            if any(target[k] for k in free):
                return None
        else:
            system = self.matrix[:, free].T
            goal = Matrix([target[k] for k in free])
            try:
                solution, extra = system.gauss_jordan_solve(goal)
            except ValueError:
                return None
            weights = solution.subs({p: 0 for p in extra})
        residual = Matrix([target]) - (weights.T * self.matrix if weights.rows else Matrix.zeros(1, self.count))
        value = sympy.Integer(1)
        for y, c in zip(weights, self.constants):
            if y != 0:
                if not y.is_integer and c != 1:
                    return None
                value *= sympy.Rational(c) ** y
        for k, r in enumerate(residual):
            if r == 0:
                continue
            if not r.is_integer:
                return None
            value *= self.values[k] ** r
        return sympy.cancel(value)

    def _unit(self, k: int, minus: Optional[int] = None) -> List[int]:
        vec = [0] * self.count
        vec[k] += 1
        if minus is not None:
            vec[minus] -= 1
        return vec

    def fresh(self) -> Symbol:
        param = Symbol(f"t_{len(self.params) + 1}")
        self.params.append(param)
        return param

    def visit_order(self) -> List[Line]:
        order = [self.sink]
        seen = {self.sink}
        remaining = [line for line in self.support.lines if line != self.sink]
        while remaining:
            ready = [line for line in remaining if all(self.heads[k] in seen for k in self.out_arrows(line))]
            if not ready:
                ready = [line for line in remaining if any(self.heads[k] in seen for k in self.out_arrows(line))]
            if not ready:
                raise SupportError(f"lines {remaining} do not reach the sink {self.sink}")
            line = min(ready)
            order.append(line)
            seen.add(line)
            remaining.remove(line)
        return order

    def process(self, line: Line) -> None:
        outs = self.out_arrows(line)
        if not outs:
            return
        pivot = outs[0]
        ratios = {k: self.determine(self._unit(k, pivot)) for k in outs[1:]}
        may_gauge = not any(k in self.values for k in self.in_arrows(line))
        if may_gauge and all(r is not None for r in ratios.values()):
            weight = sympy.Integer(1)
            for r in ratios.values():
                weight = sympy.lcm(weight, sympy.fraction(sympy.cancel(r))[1])
            if self.params and not self.in_arrows(line):
                # sources sit strictly below their out-neighbours
                low = min(_degree(sympy.cancel(weight * r), self.params) for r in [sympy.Integer(1), *ratios.values()])
                if low < 1:
                    weight *= self.params[0] ** (1 - low)
            weight = sympy.cancel(weight)
            self.values[pivot] = weight
            for k, r in ratios.items():
                self.values[k] = sympy.cancel(weight * r)
            self.plan.append(PlanStep("normalize", line, pivot, weight))
            return
        fresh = []
        for k in outs:
            value = self.determine(self._unit(k))
            if value is not None and _is_polynomial(value):
                self.values[k] = value
            else:
                self.values[k] = self.fresh()
                fresh.append((k, len(self.params) - 1))
        self.plan.append(PlanStep("free", line, params=tuple(fresh)))

    def run(self) -> Tuple[Tuple[sympy.Expr, ...], Tuple[Symbol, ...], Tuple[PlanStep, ...]]:
        if self.out_arrows(self.sink):
            raise ParameterError(f"{self.sink} is not a sink of the support")
        order = self.visit_order()
        logger.debug("visit order %s", order)
        for line in order:
            self.process(line)
        entries = tuple(self.values[k] for k in range(self.count))
        return entries, tuple(self.params), tuple(self.plan)


def _degree(expr: sympy.Expr, params: Sequence[Symbol]) -> int:
    return sympy.Poly(expr, *params).total_degree() if params else 0


def _is_polynomial(expr: sympy.Expr) -> bool:
    return sympy.fraction(sympy.cancel(expr))[1].is_number


def _generating_paths(algebra: QuiverAlgebra, support: PulledApart, params: Sequence[Symbol],
                      plan: Sequence[PlanStep], sink: Line) -> Tuple[Path, ...]:
    """For thin charts whose parameters all leave one vertex: one path to the sink per parameter."""
    if not params or algebra.impression is None or not all(d == 1 for d in support.dims):
        return ()
    quiver = algebra.quiver
    starts = [k for step in plan if step.kind == "free" for k, _ in step.params]
    if len(starts) != len(params):
        return ()
    tails = {quiver.arrows[support.line_arrows[k].arrow].tail for k in starts}
    if len(tails) != 1:
        return ()
    in_support = support.support_ids()
    graph = quiver.to_networkx(in_support)
    paths = []
    for k in starts:
        first = quiver.arrows[support.line_arrows[k].arrow]
        label = algebra.impression.label(first.id)
        walk = [first.id]
        current = first.head
        while current != sink[0]:
            same = [a for a in quiver.arrows_from(current) if a.id in in_support and algebra.impression.label(a.id) == label]
            if same:
                step = same[0]
            else:
                route = nx.shortest_path(graph, current, sink[0])
                step = next(a for a in quiver.arrows_from(current) if a.id in in_support and a.head == route[1])
            if step.id in walk:
                return ()
            walk.append(step.id)
            current = step.head
        paths.append(Path(first.tail, current, tuple(reversed(walk))))
    return tuple(paths)


def trivialize_support(
    algebra: QuiverAlgebra,
    support: Union[Subquiver, PulledApart],
    sink: Union[int, Line],
    name: Optional[str] = None,
) -> FamilyChart:
    """Chart over ``support`` with as many arrows normalized as the relations allow."""
    lines = _as_pulled_apart(algebra, support)
    sink_line = _as_line(lines, sink)
    entries, params, plan = _Trivializer(lines, sink_line).run()
    paths = _generating_paths(algebra, lines, params, plan, sink_line)
    chart = FamilyChart(algebra, name or f"{algebra.name} chart", lines, sink_line, params, entries, paths, plan=plan)
    violated = check_relations(chart.representation)
    if violated:
        raise CapabilityError(
            f"trivialization left {len(violated)} relation(s) unsatisfied, e.g. {violated[0].render(algebra.quiver)}"
        )
    logger.debug("%s: %d parameter(s), entries %s", chart.name, len(params), entries)
    return chart


def normalize_to_chart(rep: Representation, chart: FamilyChart) -> Dict[Symbol, sympy.Expr]:
    """A point z with ``rep`` isomorphic to sigma(z)."""
    if rep.dims != chart.dims:
        raise ShapeError(f"dimension vector {rep.dims} does not match the chart's {chart.dims}")
    if set(pulled_apart(rep).line_arrows) != set(chart.support.line_arrows):
        raise SupportError("the representation is not supported on the chart's pulled-apart quiver")
    if not chart.plan:
        raise CapabilityError(f"{chart.name} carries no normalization plan")
    current = line_values(rep, chart.support)
    tails = [chart.support.tail(la) for la in chart.support.line_arrows]
    heads = [chart.support.head(la) for la in chart.support.line_arrows]
    point: Dict[Symbol, sympy.Expr] = {}
    for step in chart.plan:
        if step.kind == "free":
            for k, index in step.params:
                point[chart.parameters[index]] = current[k]
            continue
        factor = sympy.cancel(current[step.pivot] / step.target.subs(point))
        for k in current:
            if tails[k] == step.line:
                current[k] = sympy.cancel(current[k] / factor)
            if heads[k] == step.line:
                current[k] = sympy.cancel(current[k] * factor)
    if iso_test(rep, evaluate_chart(chart, point)) is None:
        raise SupportError(f"the representation is not a member of {chart.name}")
    return point


def _is_monomial(expr: sympy.Expr, params: Sequence[Symbol]) -> bool:
    if is_zero(expr):
        return False
    if not params:
        return True
    return len(sympy.Poly(expr, *params).terms()) == 1


def _exponents(expr: sympy.Expr, params: Sequence[Symbol]) -> Tuple[int, ...]:
    if not params:
        return ()
    return sympy.Poly(expr, *params).monoms()[0]


def _homogeneous_degree(expr: sympy.Expr, params: Sequence[Symbol]) -> Optional[int]:
    if not params:
        return 0
    degrees = {sum(m) for m in sympy.Poly(expr, *params).monoms()}
    return degrees.pop() if len(degrees) == 1 else None


@dataclass(frozen=True)
class IsoSolution:
    """Which rescalings of the parameters give isomorphic members."""
    verdict: str
    lattice: Tuple[Tuple[int, ...], ...]
    monomial: bool
    common_scaling_iso: bool
    single_scaling_iso: Tuple[bool, ...]

    @property
    def is_projective(self) -> bool:
        return self.verdict.startswith("P^") and " x " not in self.verdict

    @property
    def dimension(self) -> int:
        if self.is_projective:
            return int(self.verdict[2:])
        return len(self.single_scaling_iso)


def _cycle_space(chart: FamilyChart) -> List[Matrix]:
    lines = chart.support.line_index
    incidence = Matrix.zeros(len(lines), len(chart.entries))
    for k, la in enumerate(chart.support.line_arrows):
        incidence[lines[chart.support.head(la)], k] += 1
        incidence[lines[chart.support.tail(la)], k] -= 1
    return nullspace(incidence)


def _scaling_basis(chart: FamilyChart) -> List[Matrix]:
    """Rescalings of the parameters of a monomial chart that fix every cycle product."""
    params = chart.parameters
    exps = Matrix([list(_exponents(e, params)) for e in chart.entries])
    cycles = _cycle_space(chart)
    constraint = Matrix.hstack(*cycles).T * exps if cycles else Matrix.zeros(0, len(params))
    return nullspace(constraint)


def _lattice_verdict(basis: List[Matrix], m: int) -> str:
    if not basis:
        return "torus family"
    if len(basis) > 1:
        return "not a projective family"
    vec = list(basis[0])
    nonzero = [v for v in vec if v != 0]
    if len(set(nonzero)) != 1:
        return "not a projective family"
    size = len(nonzero)
    if size == m:
        return f"P^{m - 1}"
    rest = m - size
    return f"P^{size - 1} x C*" if rest == 1 else f"P^{size - 1} x (C*)^{rest}"


def _scaled(point: Dict[Symbol, int], factor: int, only: Optional[Symbol] = None) -> Dict[Symbol, int]:
    return {t: v * factor if only is None or t == only else v for t, v in point.items()}


def solve_iso_parameters(chart: FamilyChart, samples: Sequence[int] = DEFAULT_SAMPLES) -> IsoSolution:
    """The rescalings ``(lambda_1 t_1, ..., lambda_m t_m)`` that keep the isoclass.

    Monomial charts get the exact lattice from the cycle space of the line
    quiver. Non-diagonal intertwiners are caught by testing the common and
    the single-parameter rescalings at a generic point.
    """
    params = chart.parameters
    m = len(params)
    if m == 0:
        return IsoSolution("rigid", (), True, True, ())
    point = generic_point(chart, 0, samples)
    member = evaluate_chart(chart, point)
    if iso_test(member, member) is None:
        raise InconsistencyError(f"{chart.name}: no intertwiner from a member to itself")
    common = iso_test(member, evaluate_chart(chart, _scaled(point, 2))) is not None
    singles = tuple(
        iso_test(member, evaluate_chart(chart, _scaled(point, 2, t))) is not None for t in params
    ) if m > 1 else (common,)
    monomial = all(_is_monomial(e, params) for e in chart.entries)
    lattice: Tuple[Tuple[int, ...], ...] = ()
    if monomial:
        basis = _scaling_basis(chart)
        lattice = tuple(tuple(int(x) for x in _integral(v)) for v in basis)
        verdict = _lattice_verdict(basis, m)
        logger.debug("%s: scaling lattice %s", chart.name, lattice)
        if verdict.startswith("P^") and m > 1 and any(singles):
            verdict = "not a projective family"
    elif common and not any(singles if m > 1 else ()):
        verdict = f"P^{m - 1}"
    elif not common and not any(singles):
        verdict = "torus family"
    else:
        verdict = "not a projective family"
    return IsoSolution(verdict, lattice, monomial, common, singles)


def _integral(vec: Matrix) -> List[int]:
    denom = 1
    for x in vec:
        denom = sympy.ilcm(denom, sympy.Rational(x).q)
    return [int(x * denom) for x in vec]


def certify_family(chart: FamilyChart, samples: Sequence[int] = DEFAULT_SAMPLES) -> Tuple[bool, bool]:
    """(proportional points give isomorphic members, inequivalent points do not)."""
    point = generic_point(chart, 0, samples)
    member = evaluate_chart(chart, point)
    proportional = iso_test(member, evaluate_chart(chart, _scaled(point, 3))) is not None
    if len(chart.parameters) < 2:
        return proportional, True
    other = generic_point(chart, 1, samples)
    distinct = iso_test(member, evaluate_chart(chart, other)) is None
    return proportional, distinct


def monomial_chart(
    algebra: QuiverAlgebra,
    support: Subquiver,
    sink: int,
    labels: Mapping[int, Iterable[int]],
    name: str,
) -> FamilyChart:
    """The chart on a thin support whose arrow ``a`` carries the product of
    ``u_i`` over ``labels[a]``; unlabelled arrows carry 1."""
    pulled = _as_pulled_apart(algebra, support)
    used = sorted({i for marks in labels.values() for i in marks})
    symbol = {i: Symbol(f"u_{i}") for i in used}
    entries = tuple(
        sympy.Mul(*[symbol[i] for i in sorted(labels.get(la.arrow, ()))]) for la in pulled.line_arrows
    )
    chart = FamilyChart(algebra, name, pulled, _as_line(pulled, sink), tuple(symbol[i] for i in used), entries)
    broken = check_relations(chart.representation)
    if broken:
        raise InconsistencyError(f"{name}: {len(broken)} relation(s) fail on the labelled chart")
    return chart


def homogenize(chart: FamilyChart) -> FamilyChart:
    """Identify parameters of a monomial chart until only the common scaling keeps the isoclass.

    While the scaling lattice has rank above one, two parameters that some
    lattice vector scales differently are set equal; every orbit still
    meets the smaller chart.
    """
    if not all(_is_monomial(e, chart.parameters) for e in chart.entries):
        raise CapabilityError(f"{chart.name} is not monomial")
    current = chart
    while True:
        params = current.parameters
        basis = _scaling_basis(current) if len(params) > 1 else []
        if len(basis) <= 1:
            return current
        ones = Matrix.ones(len(params), 1)
        if row_rank(Matrix.hstack(*basis, ones)) != len(basis):
            raise PreconditionError(f"{chart.name}: the common scaling does not keep the isoclass")
        i, j = next(
            (i, j) for vec in basis for i in range(len(params)) for j in range(i + 1, len(params)) if vec[i] != vec[j]
        )
        keep, drop = params[i], params[j]
        logger.debug("%s: setting %s = %s", chart.name, drop, keep)
        current = replace(
            current,
            parameters=tuple(t for t in params if t != drop),
            entries=tuple(sympy.expand(e.subs(drop, keep)) for e in current.entries),
            plan=(),
        )


@dataclass(frozen=True)
class ShrinkResult:
    phi: Tuple[Matrix, ...]
    power: int
    limit: Representation
    summands: Dict[int, int]
    semisimple: bool
    top: Dict[int, int]
    independent_of_point: bool
    rescale_invariant: bool

    @property
    def matches_top(self) -> bool:
        return self.semisimple and self.summands == self.top

    @property
    def target(self) -> Optional[int]:
        """The vertex of V_0 when it is a single vertex simple."""
        if self.semisimple and list(self.summands.values()) == [1]:
            return next(iter(self.summands))
        return None


def _potentials(chart: FamilyChart) -> Optional[Dict[Line, int]]:
    """Integers k with k_head - k_tail = degree of each entry, when all entries are homogeneous."""
    degrees = [_homogeneous_degree(e, chart.parameters) for e in chart.entries]
    if any(d is None for d in degrees):
        return None
    graph = nx.Graph()
    graph.add_nodes_from(chart.support.lines)
    for k, la in enumerate(chart.support.line_arrows):
        graph.add_edge(chart.support.tail(la), chart.support.head(la))
    weight: Dict[Line, int] = {}
    for component in nx.connected_components(graph):
        root = chart.sink if chart.sink in component else min(component)
        weight[root] = 0
        for u, w in nx.bfs_edges(graph, root):
            for k, la in enumerate(chart.support.line_arrows):
                tail, head = chart.support.tail(la), chart.support.head(la)
                if (tail, head) == (u, w):
                    weight[w] = weight[u] + degrees[k]
                    break
                if (tail, head) == (w, u):
                    weight[w] = weight[u] - degrees[k]
                    break
    for k, la in enumerate(chart.support.line_arrows):
        if weight[chart.support.head(la)] - weight[chart.support.tail(la)] != degrees[k]:
            return None
    return weight


def _phi(chart: FamilyChart, point: Dict[Symbol, int], samples: Sequence[int]) -> Tuple[Matrix, ...]:
    """An intertwiner sigma(z) -> sigma(lambda z) with entries in Q(lambda)."""
    weight = _potentials(chart)
    if weight is not None:
        blocks = []
        for v in chart.algebra.quiver.vertices:
            blocks.append(sympy.diag(*[LAMBDA ** weight[(v, i)] for i in range(chart.dims[v])])
                          if chart.dims[v] else Matrix.zeros(0, 0))
        return tuple(blocks)
    source = evaluate_chart(chart, point)
    scaled = evaluate_chart(chart, {t: LAMBDA * v for t, v in point.items()})
    basis = intertwiner_basis(source, scaled)
    if not basis:
        raise InconsistencyError(f"{chart.name}: no intertwiner between a member and its rescaling")
    blocks = []
    for v in range(len(basis[0])):
        acc = Matrix.zeros(*basis[0][v].shape)
        for i, vec in enumerate(basis):
            acc += samples[i % len(samples)] * vec[v]
        blocks.append(acc.applyfunc(sympy.cancel))
    return tuple(blocks)


def _limit_blocks(blocks: Sequence[Matrix], power: int) -> List[Matrix]:
    return [b.applyfunc(lambda e: sympy.cancel(e * LAMBDA ** (-power))).subs(LAMBDA, 0) if b.rows else b
            for b in blocks]


def _min_power(blocks: Sequence[Matrix]) -> int:
    powers = [lambda_valuation(e) for b in blocks for e in b if not is_zero(e)]
    if not powers:
        raise InconsistencyError("the rescaling intertwiner vanishes")
    return min(powers)


def _quotient_module(member: Representation, limit: Sequence[Matrix]) -> Representation:
    """V_z / ker phi_0, written in coordinates on the image of phi_0."""
    coords = []
    for v, block in enumerate(limit):
        cols = block.columnspace() if block.rows and block.cols else []
        if not cols:
            coords.append(Matrix.zeros(0, member.dims[v]))
            continue
        basis = Matrix.hstack(*cols)
        coords.append((basis.T * basis).inv() * basis.T * block)
    dims = tuple(c.rows for c in coords)
    mats = []
    for a in member.algebra.quiver.arrows:
        head, tail = coords[a.head], coords[a.tail]
        if not head.rows:
            mats.append(ImmutableMatrix.zeros(0, tail.rows))
            continue
        lhs = head * member.matrices[a.id]
        if not tail.rows:
            if not lhs.is_zero_matrix:
                raise InconsistencyError(f"ker phi_0 is not closed under {a.name}")
            mats.append(ImmutableMatrix.zeros(head.rows, 0))
            continue
        induced = (lhs * tail.T * (tail * tail.T).inv()).applyfunc(sympy.cancel)
        if (induced * tail - lhs).applyfunc(sympy.cancel) != Matrix.zeros(*lhs.shape):
            raise InconsistencyError(f"ker phi_0 is not closed under {a.name}")
        mats.append(ImmutableMatrix(induced))
    return Representation(member.algebra, dims, tuple(mats))


def _limit_at(
    chart: FamilyChart, point: Dict[Symbol, int], samples: Sequence[int]
) -> Tuple[Tuple[Matrix, ...], int, Representation]:
    member = evaluate_chart(chart, point)
    phi = _phi(chart, point, samples)
    power = _min_power(phi)
    return phi, power, _quotient_module(member, _limit_blocks(phi, power))


def shrink(
    chart: FamilyChart, allow_wide_socle: bool = False, samples: Sequence[int] = DEFAULT_SAMPLES
) -> ShrinkResult:
    """The lambda -> 0 limit V_0 = V_z / ker phi_0 of a P^n family.

    V_0 is formed at two generic points and at a rescaled point; the
    results are compared up to isomorphism.
    """
    solution = solve_iso_parameters(chart, samples)
    if not solution.is_projective:
        raise PreconditionError(f"{chart.name} is not a P^n family (verdict: {solution.verdict})")
    point = generic_point(chart, 0, samples)
    report = socle_top(evaluate_chart(chart, point))
    if report.socle_dim() != 1 and not allow_wide_socle:
        raise PreconditionError(f"members of {chart.name} have socle {report.socle}, which is not 1-dimensional")
    phi, power, limit = _limit_at(chart, point, samples)
    semisimple = all(m.is_zero_matrix for m in limit.matrices)
    summands = {v: d for v, d in enumerate(limit.dims) if d}

    _, _, other = _limit_at(chart, generic_point(chart, 1, samples), samples)
    independent = other.dims == limit.dims and iso_test(limit, other) is not None

    _, _, again = _limit_at(chart, _scaled(point, 3), samples)
    invariant = again.dims == limit.dims and iso_test(limit, again) is not None
    logger.debug("%s: m = %d, V0 dims %s, semisimple %s", chart.name, power, limit.dims, semisimple)
    return ShrinkResult(phi, power, limit, summands, semisimple, report.top, independent, invariant)
