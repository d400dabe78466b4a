"""The toric diagram of the r = 4 SU(3) orbifold, and perfect matchings."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from ncres.algebra.quiver import QuiverAlgebra
from ncres.catalog.builders import abelian_su3_algebra, su3_arrow_name
from ncres.catalog.su3_figures import ADJACENCY_ROWS
from ncres.errors import ParameterError
from ncres.log import get_logger
from ncres.modules.supports import SupportLattice

logger = get_logger(__name__)

_POINTS: Dict[str, Tuple[int, int]] = {
    "a1": (0, 0), "b1": (1, 0), "b2": (2, 0), "b3": (3, 0), "a2": (4, 0),
    "d3": (0, 1), "e1": (1, 1), "e2": (2, 1), "c1": (3, 1),
    "d2": (0, 2), "e3": (1, 2), "c2": (2, 2),
    "d1": (0, 3), "c3": (1, 3),
    "a3": (0, 4),
}

_CLASSES = {"a": "torus", "b": "P^1 x C*", "c": "P^1 x C*", "d": "P^1 x C*", "e": "P^2"}


@dataclass(frozen=True)
class ToricDiagram:
    """Labelled lattice points of the size-4 triangle and its basic triangulation."""
    points: Dict[str, Tuple[int, int]]
    edges: FrozenSet[FrozenSet[str]]

    def label_at(self, xy: Tuple[int, int]) -> str:
        return next(label for label, p in self.points.items() if p == xy)

    def family_class(self, label: str) -> str:
        """Expected class of the level-1 family at ``label``."""
        return _CLASSES[label[0]]

    def corners(self) -> List[str]:
        return sorted(label for label in self.points if label.startswith("a"))

    def interior(self) -> List[str]:
        return sorted(label for label in self.points if label.startswith("e"))

    def has_edge(self, g: str, h: str) -> bool:
        return frozenset((g, h)) in self.edges

    def triangles(self) -> List[FrozenSet[str]]:
        """Basic triangles of the triangulation."""
        found = []
        for (x, y) in self.points.values():
            up = [(x, y), (x + 1, y), (x, y + 1)]
            down = [(x + 1, y), (x, y + 1), (x + 1, y + 1)]
            for tri in (up, down):
                if all(p in self.points.values() for p in tri):
                    found.append(frozenset(self.label_at(p) for p in tri))
        return found


def su3_toric_diagram() -> ToricDiagram:
    coords = set(_POINTS.values())
    by_xy = {p: label for label, p in _POINTS.items()}
    edges = set()
    for (x, y) in coords:
        for other in ((x + 1, y), (x, y + 1)):
            if other in coords:
                edges.add(frozenset((by_xy[(x, y)], by_xy[other])))
        if (x + 1, y) in coords and (x, y + 1) in coords:
            edges.add(frozenset((by_xy[(x + 1, y)], by_xy[(x, y + 1)])))
    return ToricDiagram(dict(_POINTS), frozenset(edges))


def su3_adjacency_table() -> List[Tuple[str, str, int, int]]:
    """Rows (g, h, i, j): removing label i from Q^g equals removing label j from Q^h."""
    return list(ADJACENCY_ROWS)


def superpotential_terms(algebra: QuiverAlgebra) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Per grid vertex v: the 3-cycles a b c starting up from v and b a c starting right from v."""
    if not algebra.name.startswith("su3("):
        raise ParameterError(f"{algebra.name} is not an su3 algebra")
    r = int(algebra.name[4:-1])
    quiver = algebra.quiver

    def arrow(kind: str, x: int, y: int) -> int:
        return quiver.arrow(su3_arrow_name(kind, x, y, r)).id

    terms = []
    for y in range(r):
        for x in range(r):
            up = frozenset((arrow("a", x, y), arrow("b", x, y + 1), arrow("c", x + 1, y + 1)))
            right = frozenset((arrow("b", x, y), arrow("a", x + 1, y), arrow("c", x + 1, y + 1)))
            terms.append((up, right))
    return terms


def is_perfect_matching(algebra: QuiverAlgebra, arrows: FrozenSet[int]) -> bool:
    for up, right in superpotential_terms(algebra):
        if len(up & arrows) != 1 or len(right & arrows) != 1:
            return False
    return True


def perfect_matchings(algebra: QuiverAlgebra) -> List[FrozenSet[int]]:
    """Every arrow set meeting each superpotential term exactly once.

    Backtracks over the up-triangles, one arrow each, never hitting a
    right-triangle twice.
    """
    terms = superpotential_terms(algebra)
    ups = [up for up, _ in terms]
    right_of = {}
    for index, (_, right) in enumerate(terms):
        for a in right:
            right_of[a] = index
    found: List[FrozenSet[int]] = []

    def extend(k: int, chosen: List[int], hit: set) -> None:
        if k == len(ups):
            found.append(frozenset(chosen))
            return
        for a in sorted(ups[k]):
            if right_of[a] in hit:
                continue
            chosen.append(a)
            hit.add(right_of[a])
            extend(k + 1, chosen, hit)
            hit.discard(right_of[a])
            chosen.pop()

    extend(0, [], set())
    logger.debug("%s: %d perfect matchings", algebra.name, len(found))
    return found


def su3_level_count(level: int = 3, sink: int = 0) -> int:
    """Brute-force number of candidate supports with socle S_sink at exactly ``level``."""
    lattice = SupportLattice(abelian_su3_algebra())
    found = lattice.candidates(sink, level)
    count = sum(1 for lvl in found.values() if lvl == level)
    logger.info("su3: %d candidate support(s) at level %d", count, level)
    return count
