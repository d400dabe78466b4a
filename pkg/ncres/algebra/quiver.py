"""Quivers, paths, subquivers and relations.

Paths are written the way maps compose: the path ``b a`` first follows
``a`` and then ``b``. A :class:`Path` stores its arrow ids in that written
order, so ``arrows[-1]`` is the first arrow travelled.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import sympy

from ncres.errors import CompositionError, ParameterError

if TYPE_CHECKING:
    from ncres.algebra.impression import Impression


@dataclass(frozen=True)
class Arrow:
    """An arrow ``tail -> head``."""
    id: int
    tail: int
    head: int
    name: str


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with vertices ``0..num_vertices-1``."""
    num_vertices: int
    arrows: Tuple[Arrow, ...]

    def __post_init__(self) -> None:
        names = set()
        for index, arrow in enumerate(self.arrows):
            if arrow.id != index:
                raise ParameterError(f"arrow {arrow.name} has id {arrow.id}, expected {index}")
            for v in (arrow.tail, arrow.head):
                if not 0 <= v < self.num_vertices:
                    raise ParameterError(f"arrow {arrow.name} has invalid endpoint {v}")
            if arrow.name in names:
                raise ParameterError(f"duplicate arrow name {arrow.name}")
            names.add(arrow.name)

    @classmethod
    def from_triples(cls, num_vertices: int, triples: Iterable[Tuple[str, int, int]]) -> "Quiver":
        """Build a quiver from ``(name, tail, head)`` triples."""
        arrows = tuple(Arrow(i, tail, head, name) for i, (name, tail, head) in enumerate(triples))
        return cls(num_vertices, arrows)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    @cached_property
    def _by_name(self) -> Dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise ParameterError(f"no arrow named {name}") from None

    def arrows_from(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.tail == v]

    def arrows_into(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.head == v]

    def trivial(self, v: int) -> "Path":
        """The trivial path e_v."""
        if not 0 <= v < self.num_vertices:
            raise ParameterError(f"invalid vertex {v}")
        return Path(v, v, ())

    def path(self, *names: str) -> "Path":
        """Path from arrow names in written order, e.g. ``path("b_1", "a_1")``."""
        if not names:
            raise ParameterError("use trivial() for paths of length zero")
        result = Path.of_arrow(self.arrow(names[-1]))
        for name in reversed(names[:-1]):
            result = compose(Path.of_arrow(self.arrow(name)), result)
        return result

    def full(self) -> "Subquiver":
        return Subquiver(self, frozenset(a.id for a in self.arrows))

    def to_networkx(self, arrow_ids: Optional[Iterable[int]] = None) -> nx.MultiDiGraph:
        """MultiDiGraph on all vertices, keyed by arrow name."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        keep = None if arrow_ids is None else set(arrow_ids)
        for a in self.arrows:
            if keep is None or a.id in keep:
                graph.add_edge(a.tail, a.head, key=a.name, id=a.id)
        return graph


@dataclass(frozen=True, order=True)
class Path:
    """A path from ``tail`` to ``head``; trivial when ``arrows`` is empty."""
    tail: int
    head: int
    arrows: Tuple[int, ...] = ()

    @classmethod
    def of_arrow(cls, arrow: Arrow) -> "Path":
        return cls(arrow.tail, arrow.head, (arrow.id,))

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def travelled(self) -> Tuple[int, ...]:
        """Arrow ids in the order they are travelled."""
        return tuple(reversed(self.arrows))

    def vertices(self, quiver: Quiver) -> List[int]:
        """Vertices visited, starting at the tail."""
        out = [self.tail]
        for aid in self.travelled():
            out.append(quiver.arrows[aid].head)
        return out

    def label(self, quiver: Quiver) -> str:
        if self.is_trivial:
            return f"e_{self.tail}"
        return "".join(quiver.arrows[a].name for a in self.arrows)


def compose(p: Path, q: Path) -> Path:
    """Return ``p q``: first ``q``, then ``p``."""
    if p.tail != q.head:
        raise CompositionError(f"cannot compose: tail {p.tail} of left path != head {q.head} of right path")
    return Path(q.tail, p.head, p.arrows + q.arrows)


def enumerate_paths(
    quiver: Quiver,
    start: Optional[int] = None,
    end: Optional[int] = None,
    max_len: int = 0,
) -> List[Path]:
    """All paths of length <= max_len, sorted by (length, arrow ids)."""
    if max_len < 0:
        raise ParameterError("max_len must be non-negative")
    starts = list(quiver.vertices) if start is None else [start]
    layer = [quiver.trivial(v) for v in starts]
    found: List[Path] = []
    for length in range(max_len + 1):
        found.extend(p for p in layer if end is None or p.head == end)
        if length == max_len:
            break
        layer = [
            compose(Path.of_arrow(a), p)
            for p in layer
            for a in quiver.arrows_from(p.head)
        ]
    return sorted(found, key=lambda p: (p.length, p.arrows))


@dataclass(frozen=True)
class Subquiver:
    """All vertices of ``quiver`` together with a subset of its arrows."""
    quiver: Quiver = field(compare=False, repr=False)
    arrows: frozenset

    def __post_init__(self) -> None:
        bad = [a for a in self.arrows if not 0 <= a < len(self.quiver.arrows)]
        if bad:
            raise ParameterError(f"invalid arrow ids {sorted(bad)}")

    @classmethod
    def from_names(cls, quiver: Quiver, names: Iterable[str]) -> "Subquiver":
        return cls(quiver, frozenset(quiver.arrow(n).id for n in names))

    def __contains__(self, arrow_id: int) -> bool:
        return arrow_id in self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def __le__(self, other: "Subquiver") -> bool:
        return self.arrows <= other.arrows

    def __lt__(self, other: "Subquiver") -> bool:
        return self.arrows < other.arrows

    def without(self, arrow_ids: Iterable[int]) -> "Subquiver":
        return Subquiver(self.quiver, self.arrows - frozenset(arrow_ids))

    def names(self) -> List[str]:
        return [self.quiver.arrows[a].name for a in sorted(self.arrows)]

    def bitmask(self) -> int:
        return sum(1 << a for a in self.arrows)

    def to_networkx(self) -> nx.MultiDiGraph:
        return self.quiver.to_networkx(self.arrows)


def path_in_subquiver(p: Path, s: Subquiver) -> bool:
    """True iff every arrow of ``p`` lies in ``s``."""
    return all(a in s.arrows for a in p.arrows)


@dataclass(frozen=True)
class Relation:
    """A rational linear combination of parallel paths."""
    terms: Tuple[Tuple[sympy.Rational, Path], ...]

    def __post_init__(self) -> None:
        terms = tuple((sympy.Rational(c), p) for c, p in self.terms if sympy.Rational(c) != 0)
        if not terms:
            raise ParameterError("relation has no nonzero coefficient")
        first = terms[0][1]
        for _, p in terms:
            if (p.tail, p.head) != (first.tail, first.head):
                raise ParameterError("relation paths are not parallel")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def binomial(cls, p: Path, q: Path) -> "Relation":
        """The relation ``p - q``."""
        return cls(((sympy.Integer(1), p), (sympy.Integer(-1), q)))

    @property
    def tail(self) -> int:
        return self.terms[0][1].tail

    @property
    def head(self) -> int:
        return self.terms[0][1].head

    def render(self, quiver: Quiver) -> str:
        parts = []
        for coef, p in self.terms:
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            body = p.label(quiver) if mag == 1 else f"{mag}*{p.label(quiver)}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class QuiverAlgebra:
    """A quiver with relations, plus the metadata the workflows need."""
    name: str
    quiver: Quiver
    relations: Tuple[Relation, ...]
    dimension_vector: Tuple[int, ...]
    impression: Optional["Impression"] = field(default=None, compare=False, repr=False)
    center_dim: Optional[int] = None

    def __post_init__(self) -> None:
        if len(self.dimension_vector) != self.quiver.num_vertices:
            raise ParameterError(
                f"dimension vector has length {len(self.dimension_vector)}, "
                f"quiver has {self.quiver.num_vertices} vertices"
            )

    @property
    def is_thin(self) -> bool:
        return all(d == 1 for d in self.dimension_vector)

    def paths(self, start: Optional[int] = None, end: Optional[int] = None, max_len: int = 0) -> Iterator[Path]:
        yield from enumerate_paths(self.quiver, start, end, max_len)

