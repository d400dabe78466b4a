"""Tests for impressions and coordinate ladders."""

import pytest
import sympy

from ncres.algebra.impression import (
    CoordinateLadder,
    bar_tau,
    center_generators,
    check_lattice_point,
    impression_violations,
    path_labels,
)
from ncres.catalog.builders import preprojective_algebra
from ncres.errors import CapabilityError

x, y, z, w = sympy.symbols("x y z w")


class TestImpression:
    """Tests for arrow labels."""

    def test_relations_hold(self, conifold, cyclic_7_3, tautological_3):
        """Test catalog relations map to zero."""
        for algebra in (conifold, cyclic_7_3, tautological_3):
            assert impression_violations(algebra) == []

    def test_no_impression(self):
        """Test preprojective algebras carry no impression."""
        with pytest.raises(CapabilityError):
            impression_violations(preprojective_algebra("D4"))

    def test_path_label(self, conifold):
        """Test a path label is the product of its arrow labels."""
        p = conifold.quiver.path("b_1", "a_2")
        assert bar_tau(conifold.impression, p) == y * z
        assert bar_tau(conifold.impression, conifold.quiver.trivial(0)) == 1

    def test_path_labels(self, conifold):
        """Test ladders from paths."""
        ladder = path_labels(conifold, [conifold.quiver.path("a_1"), conifold.quiver.path("a_2")])
        assert ladder.render() == "(x:y)"


class TestCenter:
    """Tests for center generators."""

    def test_conifold(self, conifold):
        """Test the four degree two generators."""
        assert set(center_generators(conifold, 2)) == {x * z, x * w, y * z, y * w}

    def test_cyclic(self, cyclic_7_3):
        """Test invariants of (1/7)(1,3)."""
        gens = center_generators(cyclic_7_3, 7)
        assert set(gens) == {x**7, x**4 * y, x * y**2, y**7}
        assert gens[0] == x * y**2


class TestLatticePoint:
    """Tests for check_lattice_point."""

    def test_points_on_lattice(self):
        """Test coordinates from the (7,3) ladders."""
        assert check_lattice_point(7, 3, CoordinateLadder((x, y**5)))
        assert check_lattice_point(7, 3, CoordinateLadder((x**2, y**3)))
        assert check_lattice_point(7, 3, CoordinateLadder((x**3, y)))

    def test_off_lattice(self):
        """Test a ladder that is not a lattice point."""
        assert not check_lattice_point(7, 3, CoordinateLadder((x, y)))
        assert not check_lattice_point(7, 3, CoordinateLadder((x,)))
