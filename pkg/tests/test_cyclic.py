"""Tests for the cyclic McKay families."""

import pytest

from ncres.catalog.builders import cyclic_mckay_algebra
from ncres.errors import ParameterError
from ncres.modules.cyclic import cyclic_supports, gluing_failures, staircase


class TestStaircase:
    """Tests for the staircase of exponent pairs."""

    def test_seven_three(self):
        """Test (1/7)(1,3)."""
        assert staircase(7, 3) == [(1, 5), (2, 3), (3, 1)]

    @pytest.mark.parametrize("b,count", [(1, 1), (2, 2), (3, 3), (4, 2), (5, 3), (6, 6)])
    def test_counts(self, b, count):
        """Test the number of families for r = 7."""
        assert len(staircase(7, b)) == count


class TestCyclicSupports:
    """Tests for cyclic_supports."""

    def test_coordinates(self):
        """Test the coordinate ladders of (1/7)(1,3)."""
        families = cyclic_supports(7, 3)
        assert [f.coordinates.render() for f in families] == ["(x:y^5)", "(x^2:y^3)", "(x^3:y)"]
        assert [(f.m, f.n) for f in families] == [(1, 5), (2, 3), (3, 1)]

    def test_two_parameters(self):
        """Test every chart has two parameters."""
        for f in cyclic_supports(7, 2):
            assert len(f.chart.parameters) == 2
            assert f.start == (0 - f.m) % 7

    def test_ladders_seven_two(self):
        """Test the coordinate ladders of (1/7)(1,2)."""
        families = cyclic_supports(7, 2)
        assert [f.coordinates.render() for f in families] == ["(x:y^4)", "(x^2:y)"]

    def test_gluing(self):
        """Test neighbouring families meet."""
        assert gluing_failures(cyclic_supports(7, 3)) == []

    @pytest.mark.parametrize("r,b", [(5, 3), (7, 4), (7, 5), (9, 2), (11, 7), (12, 5)])
    def test_gluing_across_pairs(self, r, b):
        """Test the y-end of each family is the x-end of the next."""
        assert gluing_failures(cyclic_supports(r, b)) == []

    def test_shared_endpoint_seven_three(self):
        """Test Q~^1 and Q~^2 of (1/7)(1,3) meet in one support."""
        first, second, _ = cyclic_supports(7, 3)
        expected = {"a_3", "a_6", "b_1", "b_2", "b_3", "b_4", "b_5"}
        assert set(first.vanish_b.names()) == expected
        assert set(second.vanish_a.names()) == expected

    def test_gluing_other_socle(self):
        """Test the gluing holds away from vertex 0."""
        assert gluing_failures(cyclic_supports(7, 5, socle=3)) == []

    def test_vanishing_supports_shrink(self):
        """Test the coordinate points lose arrows."""
        for f in cyclic_supports(7, 3):
            assert f.vanish_a < f.full
            assert f.vanish_b < f.full

    def test_repeat_call_cached(self):
        """Test a repeat call reuses the families and hands back a fresh list."""
        first = cyclic_supports(11, 7)
        second = cyclic_supports(11, 7)
        assert second == first
        assert all(a is b for a, b in zip(first, second))
        first.clear()
        assert len(cyclic_supports(11, 7)) == len(second)

    def test_not_coprime(self):
        """Test r and b must be coprime."""
        with pytest.raises(ParameterError):
            cyclic_supports(6, 2)

    def test_bad_socle(self):
        """Test the socle must be a vertex."""
        with pytest.raises(ParameterError):
            cyclic_supports(7, 3, socle=9)


class TestAlgebra:
    """Tests for the McKay quiver builder."""

    def test_shape(self, cyclic_7_3):
        """Test vertex and arrow counts."""
        assert cyclic_7_3.quiver.num_vertices == 7
        assert len(cyclic_7_3.quiver.arrows) == 14
        assert len(cyclic_7_3.relations) == 7

    @pytest.mark.parametrize("r,b", [(1, 1), (7, 0), (7, 7), (6, 3)])
    def test_invalid(self, r, b):
        """Test invalid parameters are rejected."""
        with pytest.raises(ParameterError):
            cyclic_mckay_algebra(r, b)
