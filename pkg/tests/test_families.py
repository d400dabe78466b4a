"""Tests for family charts, isomorphism parameters and shrinking."""

from dataclasses import replace

import pytest
import sympy
from sympy import Matrix

from ncres.algebra.quiver import Subquiver
from ncres.catalog.builders import abelian_su3_algebra, preprojective_algebra, su3_arrow_name, su3_vertex
from ncres.catalog.su3_figures import parse_support
from ncres.errors import CapabilityError, InconsistencyError, ParameterError, PreconditionError, SupportError
from ncres.modules.cyclic import family_support
from ncres.modules.families import (
    _quotient_module,
    certify_family,
    evaluate_chart,
    homogenize,
    monomial_chart,
    normalize_to_chart,
    shrink,
    solve_iso_parameters,
    trivialize_support,
)
from ncres.modules.representation import Representation, iso_test, isomorphic

t1, t2 = sympy.symbols("t_1 t_2")


@pytest.fixture
def conifold_chart(conifold):
    support = Subquiver.from_names(conifold.quiver, ["a_1", "a_2"])
    return trivialize_support(conifold, support, 1)


class TestTrivialize:
    """Tests for trivialize_support."""

    def test_conifold_entries(self, conifold, conifold_chart):
        """Test both arrows become free parameters."""
        assert conifold_chart.parameters == (t1, t2)
        assert conifold_chart.entries == (t1, t2)
        assert conifold_chart.sink == (1, 0)
        assert conifold_chart.subquiver.names() == ["a_1", "a_2"]
        assert [p.label(conifold.quiver) for p in conifold_chart.generating_paths] == ["a_1", "a_2"]

    def test_single_arrow_is_rigid(self, conifold):
        """Test a single arrow is normalized to 1."""
        chart = trivialize_support(conifold, Subquiver.from_names(conifold.quiver, ["a_1"]), 1)
        assert chart.parameters == ()
        assert chart.entries == (1,)
        assert solve_iso_parameters(chart).verdict == "rigid"

    def test_sink_must_be_sink(self, conifold):
        """Test a vertex with outgoing support arrows."""
        with pytest.raises(ParameterError):
            trivialize_support(conifold, conifold.quiver.full(), 1)

    def test_not_thin(self):
        """Test a non-thin algebra needs a pulled-apart support."""
        algebra = preprojective_algebra("D4")
        with pytest.raises(ParameterError):
            trivialize_support(algebra, algebra.quiver.full(), 0)


class TestEvaluate:
    """Tests for evaluating and normalizing members."""

    def test_evaluate(self, conifold_chart):
        """Test evaluating at a sequence of values."""
        member = evaluate_chart(conifold_chart, [2, 3])
        assert member.value("a_1") == 2
        assert member.value("a_2") == 3
        assert member.value("b_1") == 0

    def test_evaluate_wrong_length(self, conifold_chart):
        """Test a point with too few values."""
        with pytest.raises(ParameterError):
            evaluate_chart(conifold_chart, [2])

    def test_normalize(self, conifold, conifold_chart):
        """Test a module on the support is found in the chart."""
        rep = Representation.thin(conifold, {"a_1": 2, "a_2": 6})
        point = normalize_to_chart(rep, conifold_chart)
        assert point == {t1: 2, t2: 6}
        assert isomorphic(rep, evaluate_chart(conifold_chart, point))

    def test_normalize_wrong_support(self, conifold, conifold_chart):
        """Test a module off the support."""
        rep = Representation.thin(conifold, {"a_1": 1})
        with pytest.raises(SupportError):
            normalize_to_chart(rep, conifold_chart)


class TestIsoParameters:
    """Tests for solve_iso_parameters and certify_family."""

    def test_conifold_p1(self, conifold_chart):
        """Test the conifold chart is a P^1."""
        solution = solve_iso_parameters(conifold_chart)
        assert solution.verdict == "P^1"
        assert solution.is_projective
        assert solution.dimension == 1
        assert solution.monomial
        assert solution.common_scaling_iso
        assert solution.single_scaling_iso == (False, False)
        assert certify_family(conifold_chart) == (True, True)

    def test_tautological_p2(self, tautological_3):
        """Test the tautological chart is a P^2."""
        support = Subquiver.from_names(tautological_3.quiver, ["a_1", "a_2", "a_3"])
        chart = trivialize_support(tautological_3, support, 1)
        assert solve_iso_parameters(chart).verdict == "P^2"


class TestShrink:
    """Tests for shrink."""

    def test_conifold(self, conifold_chart):
        """Test the family shrinks to the simple at the other vertex."""
        result = shrink(conifold_chart)
        assert result.target == 0
        assert result.semisimple
        assert result.summands == {0: 1}
        assert result.top == {0: 1}
        assert result.matches_top
        assert result.independent_of_point
        assert result.rescale_invariant

    def test_tautological(self, tautological_3):
        """Test the P^2 family shrinks to S at vertex 0."""
        support = Subquiver.from_names(tautological_3.quiver, ["a_1", "a_2", "a_3"])
        result = shrink(trivialize_support(tautological_3, support, 1))
        assert result.target == 0

    def test_rigid_chart(self, conifold):
        """Test shrinking needs a projective family."""
        chart = trivialize_support(conifold, Subquiver.from_names(conifold.quiver, ["a_1"]), 1)
        with pytest.raises(PreconditionError, match=r"is not a P\^n family \(verdict: rigid\)"):
            shrink(chart)

    def test_limit_is_the_vertex_simple(self, conifold, conifold_chart):
        """Test V0 is a representation isomorphic to S at vertex 0."""
        result = shrink(conifold_chart)
        assert result.limit.dims == (1, 0)
        assert iso_test(result.limit, Representation.vertex_simple(conifold, 0)) is not None

    def test_quotient_by_kernel(self, conifold):
        """Test projecting onto vertex 0 leaves a simple at vertex 0."""
        member = Representation.thin(conifold, {"a_1": 2, "a_2": 3})
        quotient = _quotient_module(member, [Matrix([[1]]), Matrix([[0]])])
        assert quotient.dims == (1, 0)
        assert all(m.is_zero_matrix for m in quotient.matrices)

    def test_kernel_must_be_submodule(self, conifold):
        """Test a kernel that the arrows leave is rejected."""
        member = Representation.thin(conifold, {"a_1": 2, "a_2": 3})
        with pytest.raises(InconsistencyError):
            _quotient_module(member, [Matrix([[0]]), Matrix([[1]])])


@pytest.fixture
def labelled_conifold(conifold):
    support = Subquiver.from_names(conifold.quiver, ["a_1", "a_2"])
    labels = {conifold.quiver.arrow("a_1").id: {1, 2}, conifold.quiver.arrow("a_2").id: {3, 4}}
    return monomial_chart(conifold, support, 1, labels, "Q^x")


class TestMonomialChart:
    """Tests for monomial_chart."""

    def test_entries(self, labelled_conifold):
        """Test each arrow carries the product of its labels."""
        u1, u2, u3, u4 = sympy.symbols("u_1 u_2 u_3 u_4")
        assert labelled_conifold.parameters == (u1, u2, u3, u4)
        assert labelled_conifold.entries == (u1 * u2, u3 * u4)

    def test_unlabelled_arrow_is_one(self, conifold):
        """Test an arrow without labels carries 1."""
        support = Subquiver.from_names(conifold.quiver, ["a_1", "a_2"])
        chart = monomial_chart(conifold, support, 1, {conifold.quiver.arrow("a_1").id: {5}}, "Q^x")
        assert chart.entries == (sympy.Symbol("u_5"), 1)

    def test_relations_checked(self, cyclic_7_3):
        """Test labels that break a commuting square are rejected."""
        _, support = family_support(cyclic_7_3, 1, 5, 0)
        with pytest.raises(InconsistencyError):
            monomial_chart(cyclic_7_3, support, 0, {cyclic_7_3.quiver.arrow("a_3").id: {1}}, "Q~^1")


class TestHomogenize:
    """Tests for homogenize."""

    def test_too_many_parameters(self, labelled_conifold):
        """Test four labels on a P^1 are not a projective chart until reduced."""
        assert solve_iso_parameters(labelled_conifold).verdict == "not a projective family"

    def test_reduces_to_p1(self, labelled_conifold):
        """Test the reduced chart is a P^1 of the same degrees."""
        reduced = homogenize(labelled_conifold)
        assert len(reduced.parameters) == 2
        assert solve_iso_parameters(reduced).verdict == "P^1"
        assert certify_family(reduced) == (True, True)
        assert all(sympy.Poly(e, *reduced.parameters).total_degree() == 2 for e in reduced.entries)
        assert shrink(reduced).target == 0

    def test_already_homogeneous(self, conifold_chart):
        """Test a P^1 chart is returned unchanged."""
        assert homogenize(conifold_chart) is conifold_chart

    def test_common_scaling_not_a_gauge(self, conifold):
        """Test unequal degrees along parallel arrows are rejected."""
        support = Subquiver.from_names(conifold.quiver, ["a_1", "a_2"])
        labels = {conifold.quiver.arrow("a_1").id: {1, 2}, conifold.quiver.arrow("a_2").id: {3}}
        chart = monomial_chart(conifold, support, 1, labels, "Q^x")
        with pytest.raises(PreconditionError):
            homogenize(chart)

    def test_not_monomial(self, conifold_chart):
        """Test a chart with a binomial entry is refused."""
        with pytest.raises(CapabilityError):
            homogenize(replace(conifold_chart, entries=(t1 + t2, t2)))


class TestInteriorCharts:
    """Tests for the labelled P^2 charts of the su3 interior supports."""

    @pytest.fixture(scope="class")
    def su3(self):
        return abelian_su3_algebra()

    @pytest.mark.parametrize("label,sources", [
        ("e1", [(2, 1), (1, 2)]),
        ("e2", [(3, 1), (2, 3)]),
        ("e3", [(3, 2), (1, 3)]),
    ])
    def test_shrinks_to_two_simples(self, su3, label, sources):
        """Test the P^2 family collapses onto the simples at its two sources."""
        quiver = su3.quiver
        labels = {quiver.arrow(su3_arrow_name(kind, x, y)).id: marks for kind, x, y, marks in parse_support(label)}
        chart = homogenize(monomial_chart(su3, Subquiver(quiver, frozenset(labels)), 0, labels, f"Q^{label}"))
        assert len(chart.parameters) == 3
        assert solve_iso_parameters(chart).verdict == "P^2"
        result = shrink(chart)
        assert result.semisimple
        assert result.summands == {su3_vertex(4, x, y): 1 for x, y in sources}
        assert result.matches_top
        assert result.independent_of_point
        assert result.rescale_invariant
