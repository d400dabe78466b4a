"""Tests for quivers, paths, subquivers and relations."""

import pytest
import sympy

from ncres.algebra.quiver import (
    Path,
    Quiver,
    Relation,
    Subquiver,
    compose,
    enumerate_paths,
    path_in_subquiver,
)
from ncres.errors import CompositionError, ParameterError


class TestQuiver:
    """Tests for Quiver construction and lookup."""

    def test_from_triples(self):
        """Test arrows get ids in triple order."""
        quiver = Quiver.from_triples(2, [("a", 0, 1), ("b", 1, 0)])
        assert quiver.arrow("b").id == 1
        assert quiver.arrow("b").tail == 1
        assert list(quiver.vertices) == [0, 1]

    def test_unknown_arrow(self):
        """Test looking up a missing arrow name."""
        quiver = Quiver.from_triples(1, [("loop", 0, 0)])
        with pytest.raises(ParameterError):
            quiver.arrow("missing")

    def test_duplicate_name_rejected(self):
        """Test two arrows with one name are rejected."""
        with pytest.raises(ParameterError):
            Quiver.from_triples(2, [("a", 0, 1), ("a", 1, 0)])

    def test_bad_endpoint_rejected(self):
        """Test an arrow into a missing vertex is rejected."""
        with pytest.raises(ParameterError):
            Quiver.from_triples(2, [("a", 0, 2)])

    def test_arrows_from_and_into(self, conifold):
        """Test incidence lists."""
        quiver = conifold.quiver
        assert [a.name for a in quiver.arrows_from(0)] == ["a_1", "a_2"]
        assert [a.name for a in quiver.arrows_into(0)] == ["b_1", "b_2"]

    def test_to_networkx(self, conifold):
        """Test the networkx view keeps every arrow."""
        graph = conifold.quiver.to_networkx()
        assert graph.number_of_nodes() == 2
        assert graph.number_of_edges() == 4


class TestPath:
    """Tests for path composition and enumeration."""

    def test_written_order(self, conifold):
        """Test path("b_1", "a_1") travels a_1 first."""
        quiver = conifold.quiver
        p = quiver.path("b_1", "a_1")
        assert (p.tail, p.head) == (0, 0)
        assert p.length == 2
        assert p.travelled() == (quiver.arrow("a_1").id, quiver.arrow("b_1").id)
        assert p.vertices(quiver) == [0, 1, 0]
        assert p.label(quiver) == "b_1a_1"

    def test_compose(self, conifold):
        """Test compose(p, q) follows q then p."""
        quiver = conifold.quiver
        p = Path.of_arrow(quiver.arrow("b_2"))
        q = Path.of_arrow(quiver.arrow("a_1"))
        assert compose(p, q) == quiver.path("b_2", "a_1")

    def test_compose_mismatch(self, conifold):
        """Test composing paths whose ends do not meet."""
        quiver = conifold.quiver
        a = Path.of_arrow(quiver.arrow("a_1"))
        with pytest.raises(CompositionError):
            compose(a, a)

    def test_trivial_path(self, conifold):
        """Test trivial paths have length zero."""
        e = conifold.quiver.trivial(1)
        assert e.is_trivial
        assert e.label(conifold.quiver) == "e_1"

    def test_path_needs_arrows(self, conifold):
        """Test path() with no names."""
        with pytest.raises(ParameterError):
            conifold.quiver.path()

    def test_enumerate_counts(self, conifold):
        """Test path counts by length on the conifold quiver."""
        paths = enumerate_paths(conifold.quiver, max_len=2)
        by_length = [sum(1 for p in paths if p.length == k) for k in range(3)]
        assert by_length == [2, 4, 8]

    def test_enumerate_sorted(self, conifold):
        """Test paths come shortest first."""
        lengths = [p.length for p in enumerate_paths(conifold.quiver, max_len=3)]
        assert lengths == sorted(lengths)

    def test_enumerate_endpoints(self, conifold):
        """Test start and end filters."""
        paths = enumerate_paths(conifold.quiver, start=0, end=1, max_len=3)
        assert paths
        assert all(p.tail == 0 and p.head == 1 for p in paths)
        assert {p.length for p in paths} == {1, 3}

    def test_enumerate_negative_length(self, conifold):
        """Test a negative bound is rejected."""
        with pytest.raises(ParameterError):
            enumerate_paths(conifold.quiver, max_len=-1)


class TestSubquiver:
    """Tests for Subquiver."""

    def test_from_names(self, conifold):
        """Test building from arrow names."""
        sub = Subquiver.from_names(conifold.quiver, ["a_2", "a_1"])
        assert sub.names() == ["a_1", "a_2"]
        assert len(sub) == 2
        assert sub.bitmask() == 0b11

    def test_order(self, conifold):
        """Test inclusion order."""
        small = Subquiver.from_names(conifold.quiver, ["a_1"])
        big = conifold.quiver.full()
        assert small <= big
        assert small < big
        assert not big <= small

    def test_without(self, conifold):
        """Test removing arrows."""
        full = conifold.quiver.full()
        assert full.without([0, 1]).names() == ["b_1", "b_2"]

    def test_invalid_ids(self, conifold):
        """Test arrow ids outside the quiver are rejected."""
        with pytest.raises(ParameterError):
            Subquiver(conifold.quiver, frozenset({9}))

    def test_path_in_subquiver(self, conifold):
        """Test path membership."""
        sub = Subquiver.from_names(conifold.quiver, ["a_1", "b_1"])
        assert path_in_subquiver(conifold.quiver.path("b_1", "a_1"), sub)
        assert not path_in_subquiver(conifold.quiver.path("b_2", "a_1"), sub)


class TestRelation:
    """Tests for Relation."""

    def test_binomial_render(self, conifold):
        """Test a binomial renders as p - q."""
        quiver = conifold.quiver
        rel = Relation.binomial(quiver.path("a_1", "b_1"), quiver.path("a_2", "b_2"))
        assert rel.render(quiver) == "a_1b_1 - a_2b_2"
        assert (rel.tail, rel.head) == (1, 1)

    def test_zero_terms_dropped(self, conifold):
        """Test zero coefficients are removed."""
        quiver = conifold.quiver
        rel = Relation(((0, quiver.path("a_1")), (sympy.Rational(1, 2), quiver.path("a_2"))))
        assert len(rel.terms) == 1
        assert rel.render(quiver) == "1/2*a_2"

    def test_all_zero_rejected(self, conifold):
        """Test a relation with no nonzero coefficient."""
        with pytest.raises(ParameterError):
            Relation(((0, conifold.quiver.path("a_1")),))

    def test_not_parallel(self, conifold):
        """Test paths with different endpoints are rejected."""
        quiver = conifold.quiver
        with pytest.raises(ParameterError):
            Relation.binomial(quiver.path("a_1"), quiver.path("b_1"))
