"""Path annihilators, codimension chains and the almost-large classification.

For a thin module the annihilated paths are exactly the paths leaving the
support, so the view is exact at every length. Otherwise paths are
evaluated up to a bound and the view says so.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

import sympy
from sympy import Matrix

from ncres.algebra.quiver import Path, Quiver, QuiverAlgebra, Subquiver, compose, enumerate_paths
from ncres.algebra.scalars import matrix_is_zero
from ncres.catalog.builders import parse_preprojective_kind
from ncres.catalog.charts import builtin_family_charts, intersection_rows, meeting_points
from ncres.config.models import CheckStatus
from ncres.errors import CapabilityError, ModeError, ParameterError
from ncres.log import get_logger
from ncres.modules.families import FamilyChart, evaluate_chart, generic_point, trivialize_support
from ncres.modules.representation import Representation, socle_top
from ncres.modules.supports import SupportLattice

logger = get_logger(__name__)


class AnnihilatorMode(str, Enum):
    THIN_EXACT = "thin-exact"
    BOUNDED = "bounded"


class Containment(str, Enum):
    """How the first view sits relative to the second."""
    EQUAL = "equal"
    CONTAINED = "strictly-contained"
    CONTAINS = "strictly-contains"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PAnnihilatorView:
    """The paths acting as zero on a module.

    Thin-exact views keep the support: a nontrivial path is annihilated iff
    it uses an arrow outside it. Bounded views keep the paths of length at
    most ``bound`` that act nonzero; everything else up to the bound is
    annihilated.
    """
    mode: AnnihilatorMode
    quiver: Quiver
    dims: Tuple[int, ...]
    support: FrozenSet[int] = frozenset()
    nonzero: FrozenSet[Path] = frozenset()
    bound: Optional[int] = None

    @classmethod
    def of_support(cls, quiver: Quiver, support: FrozenSet[int]) -> "PAnnihilatorView":
        return cls(AnnihilatorMode.THIN_EXACT, quiver, (1,) * quiver.num_vertices, frozenset(support))

    @property
    def caveat(self) -> Optional[str]:
        if self.mode is AnnihilatorMode.BOUNDED:
            return f"paths longer than {self.bound} were not inspected"
        return None

    def annihilates(self, p: Path) -> bool:
        if self.mode is AnnihilatorMode.THIN_EXACT:
            if p.is_trivial:
                return self.dims[p.tail] == 0
            return any(a not in self.support for a in p.arrows)
        if p.length > self.bound:
            raise ModeError(f"path of length {p.length} is beyond the bound {self.bound}")
        return p not in self.nonzero

    def annihilated(self, max_len: int) -> List[Path]:
        """Annihilated paths up to ``max_len``, shortest first."""
        if self.mode is AnnihilatorMode.BOUNDED:
            max_len = min(max_len, self.bound)
        return [p for p in enumerate_paths(self.quiver, max_len=max_len) if self.annihilates(p)]


def _nonzero_paths(rep: Representation, bound: int) -> FrozenSet[Path]:
    """Paths of length <= ``bound`` acting nonzero; zero paths are not extended."""
    found = set()
    layer = [(rep.quiver.trivial(v), sympy.eye(d)) for v, d in enumerate(rep.dims) if d]
    for length in range(bound + 1):
        found.update(p for p, _ in layer)
        if length == bound:
            break
        extended = []
        for p, value in layer:
            for a in rep.quiver.arrows_from(p.head):
                step = (Matrix(rep.matrices[a.id]) * value).applyfunc(sympy.expand)
                if not matrix_is_zero(step):
                    extended.append((compose(Path.of_arrow(a), p), step))
        layer = extended
    return frozenset(found)


def p_annihilator(rep: Representation, bound: Optional[int] = None) -> PAnnihilatorView:
    """Thin modules give an exact view unless a ``bound`` is requested; others are bounded by sum(d)."""
    if bound is None and all(d == 1 for d in rep.dims):
        return PAnnihilatorView(AnnihilatorMode.THIN_EXACT, rep.quiver, rep.dims, rep.support_ids())
    bound = sum(rep.dims) if bound is None else bound
    if bound < 1:
        raise ParameterError("the path bound must be positive")
    return PAnnihilatorView(AnnihilatorMode.BOUNDED, rep.quiver, rep.dims, rep.support_ids(),
                            _nonzero_paths(rep, bound), bound)


def _check_comparable(left: PAnnihilatorView, right: PAnnihilatorView) -> None:
    if left.mode is not right.mode:
        raise ModeError(f"cannot compare a {left.mode.value} view with a {right.mode.value} view")
    if left.quiver != right.quiver:
        raise ModeError("views belong to different quivers")
    if left.mode is AnnihilatorMode.BOUNDED and left.bound != right.bound:
        raise ModeError(f"bounded views with bounds {left.bound} and {right.bound} are not comparable")


def _subset(left: PAnnihilatorView, right: PAnnihilatorView) -> bool:
    """Whether every path annihilated by ``left`` is annihilated by ``right``."""
    if left.mode is AnnihilatorMode.THIN_EXACT:
        return right.support <= left.support and all(
            right.dims[v] == 0 for v, d in enumerate(left.dims) if d == 0
        )
    return right.nonzero <= left.nonzero


def compare_annihilators(left: PAnnihilatorView, right: PAnnihilatorView) -> Containment:
    _check_comparable(left, right)
    below, above = _subset(left, right), _subset(right, left)
    if below and above:
        return Containment.EQUAL
    if below:
        return Containment.CONTAINED
    if above:
        return Containment.CONTAINS
    return Containment.INCOMPARABLE


def witness_path(smaller: PAnnihilatorView, larger: PAnnihilatorView) -> Optional[Path]:
    """A shortest path annihilated by ``larger`` but not by ``smaller``."""
    _check_comparable(smaller, larger)
    if smaller.mode is AnnihilatorMode.THIN_EXACT:
        extra = sorted(smaller.support - larger.support)
        return Path.of_arrow(smaller.quiver.arrows[extra[0]]) if extra else None
    extra = sorted(smaller.nonzero - larger.nonzero, key=lambda p: (p.length, p.arrows))
    return extra[0] if extra else None


def closure_failures(view: PAnnihilatorView, max_len: int) -> List[Tuple[Path, Path]]:
    """Pairs (p, q) with p annihilated but the composite pq or qp not."""
    if view.mode is AnnihilatorMode.BOUNDED:
        max_len = min(max_len, view.bound)
    paths = enumerate_paths(view.quiver, max_len=max_len)
    failures = []
    for p in paths:
        if not view.annihilates(p):
            continue
        for q in paths:
            if p.length + q.length > max_len:
                continue
            if q.head == p.tail and not view.annihilates(compose(p, q)):
                failures.append((p, q))
            if q.tail == p.head and not view.annihilates(compose(q, p)):
                failures.append((p, q))
    return failures


@dataclass(frozen=True)
class AlmostLargeRecord:
    """One almost-large support (or family) with its annihilator chain.

    ``chain`` is P_1 ⊊ ... ⊊ P_ell, leaving out the zero annihilator of the
    large module, and ``witnesses[k]`` lies in P_k but not in P_{k-1}.
    ``level`` counts candidate supports in the chain, so level 1 is an
    exceptional-locus family.
    """
    algebra: QuiverAlgebra
    name: str
    support: Subquiver
    socle: int
    ell: int
    level: int
    chain: Tuple[PAnnihilatorView, ...]
    witnesses: Tuple[Path, ...]
    family: Optional[FamilyChart] = None
    family_class: str = "point"
    maximality: CheckStatus = CheckStatus.PASS
    representation: Optional[Representation] = field(default=None, compare=False, repr=False)

    @property
    def is_strict(self) -> bool:
        """Consecutive views strictly increase and each step has its witness."""
        if len(self.witnesses) != len(self.chain) or None in self.witnesses:
            return False
        if not self.chain or not self.chain[0].annihilates(self.witnesses[0]):
            return False
        steps = zip(self.chain, self.chain[1:])
        return all(compare_annihilators(a, b) is Containment.CONTAINED for a, b in steps)


def _preprojective_kind(algebra: QuiverAlgebra) -> Optional[str]:
    try:
        parse_preprojective_kind(algebra.name)
    except ParameterError:
        return None
    return algebra.name


def _first_annihilated(view: PAnnihilatorView) -> Optional[Path]:
    length = 1
    limit = view.bound if view.mode is AnnihilatorMode.BOUNDED else len(view.quiver.arrows)
    while length <= limit:
        found = view.annihilated(length)
        if found:
            return found[0]
        length += 1
    return None


def _classify_builtin(kind: str, socle: int, max_level: int) -> List[AlmostLargeRecord]:
    charts = builtin_family_charts(kind, socle)
    records = []
    views = {}
    for chart in charts:
        member = evaluate_chart(chart, generic_point(chart))
        view = p_annihilator(member)
        views[chart.target_vertex] = view
        records.append(AlmostLargeRecord(
            chart.algebra, chart.name, chart.subquiver, socle, 1, 1, (view,),
            (_first_annihilated(view),), chart, "P^1", CheckStatus.ASSUMED, member,
        ))
    if max_level >= 2:
        for row in intersection_rows(kind, socle):
            point, _ = meeting_points(charts, row)
            view = p_annihilator(point)
            above = views[row.left]
            records.append(AlmostLargeRecord(
                point.algebra, row.name, Subquiver(point.quiver, point.support_ids()), socle, 2, 2,
                (above, view), (_first_annihilated(above), witness_path(above, view)),
                None, "point", CheckStatus.ASSUMED, point,
            ))
    return records


def classify_almost_large(
    algebra: QuiverAlgebra,
    socle: int,
    thin_only: bool = True,
    max_level: int = 1,
) -> List[AlmostLargeRecord]:
    """Almost-large modules with socle S_socle, up to ``max_level`` candidates deep.

    Thin algebras are searched exhaustively. D and E6 preprojective algebras
    use the built-in charts when ``thin_only`` is off; maximality of their
    chains is assumed, not certified.
    """
    if socle not in algebra.quiver.vertices:
        raise ParameterError(f"vertex {socle} is not in {algebra.name}")
    if not algebra.is_thin:
        kind = _preprojective_kind(algebra)
        if kind is None:
            raise CapabilityError(f"{algebra.name} is not thin and has no built-in charts")
        if thin_only:
            raise CapabilityError(f"{algebra.name} is not thin; pass thin_only=False to use the built-in charts")
        return _classify_builtin(kind, socle, max_level)

    lattice = SupportLattice(algebra)
    quiver = algebra.quiver
    records = []
    found = lattice.candidates(socle, max_level)
    for support, level in sorted(found.items(), key=lambda item: sum(1 << a for a in item[0])):
        values = lattice.witness_values(support)
        rep = Representation.thin(algebra, {quiver.arrows[a].name: v for a, v in values.items()})
        if socle_top(rep).socle != {socle: 1}:
            logger.debug("dropping support %s: socle is not S_%d", sorted(support), socle)
            continue
        views = [PAnnihilatorView.of_support(quiver, s) for s in lattice.cover_chain(support)]
        witnesses = tuple(witness_path(a, b) for a, b in zip(views, views[1:]))
        sub = Subquiver(quiver, support)
        family_class = lattice.family_class(support)
        family = None
        if family_class.moduli_dim >= 1:
            try:
                family = trivialize_support(algebra, sub, socle, name=f"{algebra.name} {'/'.join(sub.names())}")
            except CapabilityError as exc:
                logger.warning("no chart for support %s: %s", sub.names(), exc)
        records.append(AlmostLargeRecord(
            algebra, "/".join(sub.names()), sub, socle, lattice.ell(support), level, tuple(views[1:]),
            witnesses, family, family_class.name, CheckStatus.PASS, rep,
        ))
    logger.info("%s: %d almost-large record(s) with socle %d", algebra.name, len(records), socle)
    return records
