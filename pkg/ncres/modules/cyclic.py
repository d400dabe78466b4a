"""Almost-large supports of the cyclic McKay algebras, built without search.

A family with socle S_s is fixed by a pair (m, n) with m = n*b (mod r): an
a-path of length m and a b-path of length n from vertex v = s - m to s.
Only the staircase of such pairs, minimal in both coordinates, gives
families.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import List, Tuple

from ncres.algebra.impression import CoordinateLadder, family_coordinates
from ncres.algebra.quiver import Path, QuiverAlgebra, Subquiver
from ncres.catalog.builders import cyclic_mckay_algebra
from ncres.errors import InconsistencyError, ParameterError
from ncres.log import get_logger
from ncres.modules.families import FamilyChart, trivialize_support

logger = get_logger(__name__)


def staircase(r: int, b: int) -> List[Tuple[int, int]]:
    """Pairs (m, n) with m = n*b mod r that no other pair dominates, m ascending."""
    points = [((n * b) % r, n) for n in range(1, r)]
    minimal = [(m, n) for m, n in points if not any(m2 <= m and n2 <= n and (m2, n2) != (m, n) for m2, n2 in points)]
    return sorted(minimal)


@dataclass(frozen=True)
class CyclicFamily:
    """``full`` is the family's support; ``vanish_a`` and ``vanish_b`` are the
    supports at the points where the x- and y-coordinates vanish, read off
    the arrow sets rather than from chart values."""
    m: int
    n: int
    start: int
    full: Subquiver
    vanish_a: Subquiver
    vanish_b: Subquiver
    chart: FamilyChart
    coordinates: CoordinateLadder


def _walk(algebra: QuiverAlgebra, kind: str, start: int, length: int) -> Path:
    quiver = algebra.quiver
    arrows = []
    v = start
    for _ in range(length):
        arrow = quiver.arrow(f"{kind}_{v}")
        arrows.append(arrow.id)
        v = arrow.head
    return Path(start, v, tuple(reversed(arrows)))


def _strip(algebra: QuiverAlgebra, full: Subquiver, kind: str, start: int) -> Subquiver:
    """Drop the ``kind`` arrow at ``start`` and at every vertex whose path of
    other-kind arrows inside ``full`` runs into ``start``."""
    quiver = algebra.quiver
    other = "b" if kind == "a" else "a"
    removed = set()
    for v in quiver.vertices:
        arrow = quiver.arrow(f"{kind}_{v}")
        if arrow.id not in full.arrows:
            continue
        u = v
        for _ in range(quiver.num_vertices):
            if u == start:
                removed.add(arrow.id)
                break
            step = quiver.arrow(f"{other}_{u}")
            if step.id not in full.arrows:
                break
            u = step.head
    return Subquiver(quiver, full.arrows - removed)


def family_support(algebra: QuiverAlgebra, m: int, n: int, socle: int) -> Tuple[int, Subquiver]:
    """The start vertex and support: both paths, plus both arrows at every vertex they miss."""
    r = algebra.quiver.num_vertices
    start = (socle - m) % r
    p = _walk(algebra, "a", start, m)
    q = _walk(algebra, "b", start, n)
    if p.head != socle or q.head != socle:
        raise InconsistencyError(f"paths from {start} of lengths ({m}, {n}) do not both end at {socle}")
    arrows = set(p.arrows) | set(q.arrows)
    visited = set(p.vertices(algebra.quiver)) | set(q.vertices(algebra.quiver))
    for v in algebra.quiver.vertices:
        if v not in visited:
            arrows.update(a.id for a in algebra.quiver.arrows_from(v))
    return start, Subquiver(algebra.quiver, frozenset(arrows))


def cyclic_supports(r: int, b: int, socle: int = 0) -> List[CyclicFamily]:
    """One family per staircase point, ordered by the exponent of x."""
    return list(_cyclic_supports(r, b, socle))


@lru_cache(maxsize=64)
def _cyclic_supports(r: int, b: int, socle: int) -> Tuple[CyclicFamily, ...]:
    if gcd(r, b) != 1:
        raise ParameterError(f"gcd({r}, {b}) != 1")
    algebra = cyclic_mckay_algebra(r, b)
    if socle not in algebra.quiver.vertices:
        raise ParameterError(f"vertex {socle} is not in {algebra.name}")
    families = []
    for m, n in staircase(r, b):
        start, support = family_support(algebra, m, n, socle)
        chart = trivialize_support(algebra, support, socle, name=f"Q~^{m}")
        if len(chart.parameters) != 2:
            raise InconsistencyError(f"{chart.name} has {len(chart.parameters)} parameters, expected 2")
        _check_start_parameters(chart, start)
        families.append(CyclicFamily(
            m, n, start, support,
            _strip(algebra, support, "a", start),
            _strip(algebra, support, "b", start),
            chart,
            family_coordinates(chart),
        ))
    logger.debug("%s: staircase %s", algebra.name, [(f.m, f.n) for f in families])
    return tuple(families)


def _check_start_parameters(chart: FamilyChart, start: int) -> None:
    """a_start and b_start carry the two free parameters."""
    quiver = chart.algebra.quiver
    values = {la.arrow: e for la, e in zip(chart.support.line_arrows, chart.entries)}
    x_value = values[quiver.arrow(f"a_{start}").id]
    y_value = values[quiver.arrow(f"b_{start}").id]
    if x_value not in chart.parameters or y_value not in chart.parameters:
        raise InconsistencyError(f"{chart.name}: the arrows at vertex {start} are not the free parameters")


def gluing_failures(families: List[CyclicFamily]) -> List[Tuple[int, int]]:
    """Neighbouring staircase points (m_i, m_{i+1}) where the y-vanishing support of
    the first differs from the x-vanishing support of the second."""
    return [
        (left.m, right.m)
        for left, right in zip(families, families[1:])
        if left.vanish_b.arrows != right.vanish_a.arrows
    ]
