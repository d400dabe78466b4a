"""Supports of thin representations.

A thin representation with every supported arrow nonzero exists on an arrow
set S exactly when each binomial relation has both sides inside S or
neither, no monomial relation lies inside S, and the multiplicative
constraints ``x^p = c x^q`` are solvable over the nonzero rationals.
"""

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import sympy
from sympy import Matrix

from ncres.algebra.quiver import QuiverAlgebra
from ncres.algebra.scalars import nullspace, row_rank
from ncres.errors import CapabilityError, ParameterError
from ncres.log import get_logger

logger = get_logger(__name__)

ArrowSet = FrozenSet[int]


@dataclass(frozen=True)
class Binomial:
    """``x^left = constant * x^right`` on arrow scalars."""
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    constant: sympy.Rational


@dataclass(frozen=True)
class FamilyClass:
    moduli_dim: int
    torus_rank: int
    projective_dim: int

    @property
    def name(self) -> str:
        if self.projective_dim == 0:
            return "torus" if self.torus_rank else "point"
        base = f"P^{self.projective_dim}"
        if not self.torus_rank:
            return base
        if self.torus_rank == 1:
            return f"{base} x C*"
        return f"{base} x (C*)^{self.torus_rank}"


def _primitive(vec: Sequence[sympy.Rational]) -> List[int]:
    denom = reduce(sympy.ilcm, [sympy.Rational(v).q for v in vec], 1)
    ints = [int(v * denom) for v in vec]
    common = reduce(gcd, ints, 0) or 1
    return [i // common for i in ints]


class SupportLattice:
    """Valid supports of a thin algebra, ordered by inclusion."""

    def __init__(self, algebra: QuiverAlgebra):
        if not algebra.is_thin:
            raise CapabilityError(f"{algebra.name} is not thin; its supports need built-in charts")
        self.algebra = algebra
        self.quiver = algebra.quiver
        self.full: ArrowSet = frozenset(a.id for a in self.quiver.arrows)
        self.binomials: List[Binomial] = []
        self.monomials: List[Tuple[int, ...]] = []
        for rel in algebra.relations:
            if len(rel.terms) == 1:
                self.monomials.append(rel.terms[0][1].arrows)
            elif len(rel.terms) == 2:
                (c1, p), (c2, q) = rel.terms
                self.binomials.append(Binomial(p.arrows, q.arrows, -c2 / c1))
            else:
                raise CapabilityError(f"relation {rel.render(self.quiver)} has more than two terms")
        self._ell: Dict[ArrowSet, int] = {self.full: 0}
        self._covers: Dict[ArrowSet, List[ArrowSet]] = {}

    def _inside(self, arrows: Sequence[int], support: ArrowSet) -> bool:
        return all(a in support for a in arrows)

    def violation(self, support: ArrowSet) -> Optional[Tuple[int, ...]]:
        """Arrows of which at least one must be removed, or None when ``support`` is valid."""
        for rel in self.binomials:
            left = self._inside(rel.left, support)
            right = self._inside(rel.right, support)
            if left and not right:
                return tuple(sorted(set(rel.left)))
            if right and not left:
                return tuple(sorted(set(rel.right)))
        for mono in self.monomials:
            if self._inside(mono, support):
                return tuple(sorted(set(mono)))
        return None

    def is_valid(self, support: ArrowSet) -> bool:
        return self.violation(support) is None

    def closure(self, support: ArrowSet) -> Optional[ArrowSet]:
        """Smallest valid support containing ``support``, or None if a monomial relation forbids it."""
        current = set(support)
        changed = True
        while changed:
            changed = False
            for rel in self.binomials:
                left = self._inside(rel.left, current)
                right = self._inside(rel.right, current)
                if left != right:
                    current.update(rel.right if left else rel.left)
                    changed = True
        result = frozenset(current)
        if any(self._inside(mono, result) for mono in self.monomials):
            return None
        return result

    def exponent_matrix(self, support: ArrowSet) -> Tuple[Matrix, List[sympy.Rational], List[int]]:
        """Rows ``exps(p) - exps(q)`` of the binomials inside ``support``, their constants, and the column arrows."""
        columns = sorted(support)
        index = {a: k for k, a in enumerate(columns)}
        rows, constants = [], []
        for rel in self.binomials:
            if not self._inside(rel.left, support):
                continue
            row = [0] * len(columns)
            for a, count in Counter(rel.left).items():
                row[index[a]] += count
            for a, count in Counter(rel.right).items():
                row[index[a]] -= count
            rows.append(row)
            constants.append(rel.constant)
        matrix = Matrix(rows) if rows else Matrix.zeros(0, len(columns))
        return matrix, constants, columns

    def is_solvable(self, support: ArrowSet) -> bool:
        """Whether ``x^row = constant`` has a solution in nonzero rationals."""
        matrix, constants, _ = self.exponent_matrix(support)
        if all(c == 1 for c in constants):
            return True
        for y in nullspace(matrix.T):
            weights = _primitive(list(y))
            value = sympy.Integer(1)
            for c, w in zip(constants, weights):
                value *= sympy.Rational(c) ** w
            if value != 1:
                return False
        return True

    def witness_values(self, support: ArrowSet) -> Dict[int, sympy.Rational]:
        """Nonzero arrow scalars satisfying the relations on ``support``.

        Only binomials ``p - q`` are handled, and for those setting every
        arrow to 1 is a witness. A relation ``p - c q`` with c != 1 raises
        CapabilityError even when ``is_solvable`` holds.
        """
        _, constants, _ = self.exponent_matrix(support)
        if any(c != 1 for c in constants):
            raise CapabilityError("witness values are only built for relations of the form p - q")
        return {a: sympy.Integer(1) for a in support}

    def graph(self, support: ArrowSet) -> nx.MultiDiGraph:
        return self.quiver.to_networkx(support)

    def reaches(self, support: ArrowSet, sink: int) -> bool:
        """Every vertex has a path to ``sink`` inside ``support``."""
        graph = self.graph(support)
        return len(nx.ancestors(graph, sink)) + 1 == self.quiver.num_vertices

    def is_candidate(self, support: ArrowSet, sink: int) -> bool:
        """Thin modules on ``support`` exist and all have socle S_sink."""
        if any(a.id in support for a in self.quiver.arrows_from(sink)):
            return False
        return self.is_valid(support) and self.reaches(support, sink) and self.is_solvable(support)

    def moduli_dim(self, support: ArrowSet) -> int:
        matrix, _, _ = self.exponent_matrix(support)
        components = nx.number_weakly_connected_components(self.graph(support))
        return len(support) - row_rank(matrix) - (self.quiver.num_vertices - components)

    def cycle_rows(self, support: ArrowSet) -> Matrix:
        """Cycle-space basis of the arrows inside each strongly connected component."""
        columns = sorted(support)
        index = {a: k for k, a in enumerate(columns)}
        graph = self.graph(support)
        rows = []
        for component in nx.strongly_connected_components(graph):
            inner = [a for a in columns
                     if self.quiver.arrows[a].tail in component and self.quiver.arrows[a].head in component]
            if not inner:
                continue
            verts = sorted(component)
            incidence = Matrix.zeros(len(verts), len(inner))
            for k, a in enumerate(inner):
                arrow = self.quiver.arrows[a]
                incidence[verts.index(arrow.head), k] += 1
                incidence[verts.index(arrow.tail), k] -= 1
            for vec in nullspace(incidence):
                row = [0] * len(columns)
                for k, a in enumerate(inner):
                    row[index[a]] = vec[k]
                rows.append(row)
        return Matrix(rows) if rows else Matrix.zeros(0, len(columns))

    def family_class(self, support: ArrowSet) -> FamilyClass:
        matrix, _, _ = self.exponent_matrix(support)
        moduli = self.moduli_dim(support)
        cycles = self.cycle_rows(support)
        torus = row_rank(Matrix.vstack(cycles, matrix)) - row_rank(matrix)
        return FamilyClass(moduli, torus, moduli - torus)

    def covers(self, support: ArrowSet) -> List[ArrowSet]:
        """Minimal valid supports strictly above ``support``."""
        if support in self._covers:
            return self._covers[support]
        above = set()
        for e in sorted(self.full - support):
            closed = self.closure(support | {e})
            if closed is not None:
                above.add(closed)
        minimal = [t for t in above if not any(u < t for u in above)]
        minimal.sort(key=lambda t: sum(1 << a for a in t))
        self._covers[support] = minimal
        return minimal

    def ell(self, support: ArrowSet) -> int:
        """Length of the longest chain of covers from the full arrow set down to ``support``."""
        if support in self._ell:
            return self._ell[support]
        if not self.is_valid(support):
            raise ParameterError("ell is only defined for valid supports")
        value = 1 + max((self.ell(t) for t in self.covers(support)), default=0)
        self._ell[support] = value
        return value

    def cover_chain(self, support: ArrowSet) -> List[ArrowSet]:
        """A longest cover chain, from the full arrow set down to ``support``."""
        chain = [support]
        current = support
        while current != self.full and self.covers(current):
            current = max(self.covers(current), key=lambda t: (self.ell(t), -sum(1 << a for a in t)))
            chain.append(current)
        return list(reversed(chain))

    def candidates(self, sink: int, max_level: int = 1) -> Dict[ArrowSet, int]:
        """Candidate supports with socle S_sink, mapped to their level (1 = maximal).

        Depth-first over zero sets, starting from the arrows out of ``sink``.
        A violated relation branches over the arrows of its intact side.
        """
        if max_level < 1:
            raise ParameterError("max_level must be at least 1")
        start = frozenset(a.id for a in self.quiver.arrows_from(sink))
        best: Dict[ArrowSet, int] = {}
        found = set()
        stack = [(start, 0)]
        while stack:
            zero, above = stack.pop()
            if best.get(zero, max_level + 1) <= above:
                continue
            best[zero] = above
            support = self.full - zero
            if not self.reaches(support, sink):
                continue
            broken = self.violation(support)
            if broken is not None:
                stack.extend((zero | {e}, above) for e in broken)
                continue
            if self.is_solvable(support):
                found.add(support)
                above += 1
                if above >= max_level:
                    continue
            stack.extend((zero | {e}, above) for e in sorted(support, reverse=True))
        logger.debug("visited %d zero sets, %d candidate supports at sink %d", len(best), len(found), sink)
        levels: Dict[ArrowSet, int] = {}
        for support in sorted(found, key=len, reverse=True):
            levels[support] = 1 + max((levels[t] for t in levels if support < t), default=0)
        return {s: lvl for s, lvl in levels.items() if lvl <= max_level}
