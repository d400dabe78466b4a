"""Randomized and exhaustive checks over whole families of inputs."""

import random
from itertools import combinations
from math import gcd

import pytest
import sympy

from ncres.algebra.impression import bar_tau
from ncres.algebra.quiver import compose, enumerate_paths
from ncres.catalog.builders import cyclic_mckay_algebra
from ncres.modules.cyclic import cyclic_supports, staircase
from ncres.modules.families import shrink
from ncres.modules.representation import Representation, iso_test
from ncres.modules.supports import SupportLattice
from ncres.oracle.hj import boundary_points, hj_continued_fraction

SEED = 20240611


def random_thin(algebra, rng):
    values = {}
    for arrow in algebra.quiver.arrows:
        if rng.random() < 0.7:
            values[arrow.name] = sympy.Rational(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice((1, -1))
    return Representation.thin(algebra, values)


def gauge(rep, scalars):
    quiver = rep.algebra.quiver
    values = {}
    for arrow in quiver.arrows:
        value = rep.value(arrow.name)
        if value != 0:
            values[arrow.name] = value * scalars[arrow.head] / scalars[arrow.tail]
    return Representation.thin(rep.algebra, values)


class TestIsoTestProperties:
    """Tests for iso_test on random thin representations."""

    @pytest.fixture(scope="class")
    def samples(self):
        rng = random.Random(SEED)
        algebra = cyclic_mckay_algebra(7, 3)
        reps = [random_thin(algebra, rng) for _ in range(200)]
        scalars = [[sympy.Rational(rng.randint(1, 7), rng.randint(1, 5)) for _ in range(7)] for _ in reps]
        return list(zip(reps, scalars))

    def test_reflexive(self, samples):
        """Test every representation is isomorphic to itself."""
        assert all(iso_test(rep, rep) is not None for rep, _ in samples)

    def test_gauge_invariance(self, samples):
        """Test rescaling by vertex scalars keeps the isoclass, in both directions."""
        for rep, scalars in samples:
            moved = gauge(rep, scalars)
            assert iso_test(rep, moved) is not None
            assert iso_test(moved, rep) is not None

    def test_dropping_an_arrow_changes_class(self, samples):
        """Test a thin representation with one arrow zeroed is never isomorphic to the original."""
        for rep, _ in samples:
            nonzero = [a.name for a in rep.algebra.quiver.arrows if rep.value(a.name) != 0]
            if not nonzero:
                continue
            values = {name: rep.value(name) for name in nonzero[1:]}
            assert iso_test(rep, Representation.thin(rep.algebra, values)) is None

    def test_transitive(self, samples):
        """Test two gauge moves compose to an isomorphism."""
        for (rep, first), (_, second) in zip(samples, samples[1:]):
            assert iso_test(rep, gauge(gauge(rep, first), second)) is not None


class TestBarTau:
    """Tests for multiplicativity of path labels."""

    @pytest.mark.parametrize("name", ["conifold", "cyclic_7_3", "tautological_3"])
    def test_multiplicative(self, name, request):
        """Test the label of p q is the product of the labels, up to total length 4."""
        algebra = request.getfixturevalue(name)
        paths = enumerate_paths(algebra.quiver, max_len=2)
        for p in paths:
            for q in paths:
                if p.tail != q.head:
                    continue
                expected = sympy.expand(bar_tau(algebra.impression, p) * bar_tau(algebra.impression, q))
                assert bar_tau(algebra.impression, compose(p, q)) == expected


class TestClosure:
    """Tests for support closure over every pair of arrows."""

    @pytest.mark.parametrize("name", ["conifold", "cyclic_7_3"])
    def test_pairs(self, name, request):
        """Test closures contain the pair, are valid, and are idempotent and monotone."""
        algebra = request.getfixturevalue(name)
        lattice = SupportLattice(algebra)
        for e, f in combinations(sorted(lattice.full), 2):
            pair = frozenset((e, f))
            closed = lattice.closure(pair)
            assert closed is not None
            assert pair <= closed
            assert lattice.is_valid(closed)
            assert lattice.closure(closed) == closed
            assert lattice.closure(frozenset((e,))) <= closed


class TestShrinkIndependence:
    """Tests for shrink limits across points and rescalings."""

    @pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7])
    def test_mckay_families(self, r):
        """Test each family of (1/r)(1,r-1) shrinks to the simple at its start vertex."""
        for family in cyclic_supports(r, r - 1):
            result = shrink(family.chart)
            assert result.independent_of_point
            assert result.rescale_invariant
            assert result.target == family.start


class TestHirzebruchJungExhaustive:
    """Tests for the continued fraction against the staircase, r <= 50."""

    PAIRS = [(r, b) for r in range(2, 51) for b in range(1, r) if gcd(r, b) == 1]

    def test_reconstruction(self):
        """Test every expansion evaluates back to r/b."""
        for r, b in self.PAIRS:
            data = hj_continued_fraction(r, b)
            assert data.value() == sympy.Rational(r, b)
            assert all(a >= 2 for a in data.coefficients)

    def test_staircase_count(self):
        """Test the staircase has one point per coefficient."""
        for r, b in self.PAIRS:
            data = hj_continued_fraction(r, b)
            assert len(staircase(r, b)) == data.length
            assert boundary_points(r, b) == [(n, m) for m, n in staircase(r, b)]
