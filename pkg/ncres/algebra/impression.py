"""Impressions: arrow labels in a commutative ring B, and what they give.

An impression labels each arrow with a matrix over B, one block row per
head line and one block column per tail line. In every catalog algebra the
blocks are 1x1, so a path label is a single monomial.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple, Union

import sympy
from sympy import Matrix

from ncres.algebra.quiver import Path, QuiverAlgebra, Relation, enumerate_paths
from ncres.algebra.scalars import matrix_is_zero, render_poly
from ncres.errors import CapabilityError, ParameterError
from ncres.log import get_logger

if TYPE_CHECKING:
    from ncres.modules.families import FamilyChart

logger = get_logger(__name__)


@dataclass(frozen=True)
class Impression:
    """Labels ``tau(a)`` over the polynomial ring in ``variables``."""
    variables: Tuple[str, ...]
    labels: Tuple[Matrix, ...]
    ranks: Tuple[int, ...]

    @classmethod
    def thin(cls, variables: Sequence[str], labels: Sequence[Union[int, str, sympy.Expr]], num_vertices: int) -> "Impression":
        """Impression with one scalar label per arrow, in arrow-id order."""
        mats = tuple(Matrix([[sympy.sympify(lab)]]) for lab in labels)
        return cls(tuple(variables), mats, (1,) * num_vertices)

    @property
    def is_thin(self) -> bool:
        return all(r == 1 for r in self.ranks)

    @property
    def symbols(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(v) for v in self.variables)

    def label(self, arrow_id: int) -> Matrix:
        return self.labels[arrow_id]


def bar_tau(impression: Impression, p: Path) -> Union[sympy.Expr, Matrix]:
    """Label of a path: the product of arrow labels in written order."""
    if p.is_trivial:
        ident = sympy.eye(impression.ranks[p.tail])
        return sympy.Integer(1) if impression.is_thin else ident
    product = impression.label(p.arrows[0])
    for aid in p.arrows[1:]:
        product = product * impression.label(aid)
    product = product.applyfunc(sympy.expand)
    return product[0, 0] if impression.is_thin else product


def relation_image(impression: Impression, relation: Relation) -> Matrix:
    total = None
    for coef, path in relation.terms:
        value = bar_tau(impression, path)
        term = Matrix([[value]]) if impression.is_thin else value
        total = coef * term if total is None else total + coef * term
    return total.applyfunc(sympy.expand)


def impression_violations(algebra: QuiverAlgebra) -> List[Relation]:
    """Relations whose image under the impression is not identically zero."""
    if algebra.impression is None:
        raise CapabilityError(f"{algebra.name} has no impression")
    return [rel for rel in algebra.relations if not matrix_is_zero(relation_image(algebra.impression, rel))]


def cycle_labels(algebra: QuiverAlgebra, vertex: int, max_len: int) -> Dict[sympy.Expr, Path]:
    """Distinct labels of nontrivial cycles at ``vertex``, each with its first path."""
    impression = _thin_impression(algebra)
    found: Dict[sympy.Expr, Path] = {}
    for p in enumerate_paths(algebra.quiver, vertex, vertex, max_len):
        if p.is_trivial:
            continue
        found.setdefault(bar_tau(impression, p), p)
    return found


def _thin_impression(algebra: QuiverAlgebra) -> Impression:
    if algebra.impression is None:
        raise CapabilityError(f"{algebra.name} has no impression")
    if not algebra.impression.is_thin:
        raise CapabilityError("center generators need a thin impression")
    return algebra.impression


def center_generators(algebra: QuiverAlgebra, max_len: int) -> List[sympy.Expr]:
    """Labels carried by a cycle at every vertex, reduced to a generating set.

    A label is dropped when it is the product of two other common labels.
    """
    common = None
    for v in algebra.quiver.vertices:
        labels = set(cycle_labels(algebra, v, max_len))
        common = labels if common is None else common & labels
    common = common or set()

    def decomposable(mu: sympy.Expr) -> bool:
        for nu in common:
            if nu == mu:
                continue
            quotient = sympy.cancel(mu / nu)
            if quotient in common and sympy.fraction(quotient)[1] == 1:
                return True
        return False

    gens = [mu for mu in common if not decomposable(mu)]
    gens.sort(key=lambda e: (_total_degree(e), render_poly(e)))
    logger.debug("center generators of %s up to length %d: %s", algebra.name, max_len, gens)
    return gens


def _total_degree(expr: sympy.Expr) -> int:
    gens = sorted(expr.free_symbols, key=str)
    return sympy.Poly(expr, *gens).total_degree() if gens else 0


@dataclass(frozen=True)
class CoordinateLadder:
    """Homogeneous coordinates of a family, as impression monomials."""
    coordinates: Tuple[sympy.Expr, ...]

    def render(self) -> str:
        return "(" + ":".join(render_poly(c) for c in self.coordinates) + ")"


def path_labels(algebra: QuiverAlgebra, paths: Sequence[Path]) -> CoordinateLadder:
    if algebra.impression is None:
        raise CapabilityError(f"{algebra.name} has no impression")
    return CoordinateLadder(tuple(bar_tau(algebra.impression, p) for p in paths))


def family_coordinates(chart: "FamilyChart") -> CoordinateLadder:
    """``(tau(p_1) : ... : tau(p_m))`` for the chart's generating paths."""
    if not chart.generating_paths:
        raise ParameterError("chart has no generating paths")
    return path_labels(chart.algebra, chart.generating_paths)


def check_lattice_point(r: int, b: int, ladder: CoordinateLadder) -> bool:
    """For (x^m : y^n) on cyclic(r, b): is m == n*b mod r?"""
    x, y = sympy.symbols("x y")
    if len(ladder.coordinates) != 2:
        return False
    m = sympy.degree(ladder.coordinates[0], x)
    n = sympy.degree(ladder.coordinates[1], y)
    return (m - n * b) % r == 0
