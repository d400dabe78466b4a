"""Tests for exact scalar helpers."""

import pytest
import sympy
from sympy import Matrix

from ncres.algebra.scalars import (
    LAMBDA,
    eval_at_point,
    is_zero,
    lambda_limit,
    lambda_valuation,
    matrix_is_zero,
    min_lambda_power,
    nullspace,
    render_poly,
    row_rank,
    to_rational,
)
from ncres.errors import DomainError, UndefinedPowerError

x, y = sympy.symbols("x y")


class TestRationals:
    """Tests for rational coercion and evaluation."""

    def test_to_rational_float(self):
        """Test floats are read exactly."""
        assert to_rational(0.5) == sympy.Rational(1, 2)

    def test_to_rational_symbolic(self):
        """Test symbolic values are rejected."""
        with pytest.raises(DomainError):
            to_rational(x)

    def test_eval_at_point(self):
        """Test substitution by name."""
        assert eval_at_point(x * y + 1, {"x": 2, "y": 3}) == 7

    def test_eval_missing_variable(self):
        """Test a missing variable is reported."""
        with pytest.raises(DomainError, match="y"):
            eval_at_point(x * y, {"x": 1})

    def test_is_zero_cancels(self):
        """Test rational functions are simplified before comparing."""
        assert is_zero((x**2 - 1) / (x - 1) - (x + 1))
        assert matrix_is_zero(Matrix([[0, x - x]]))
        assert not matrix_is_zero(Matrix([[0, 1]]))


class TestLambda:
    """Tests for powers and limits in lambda."""

    def test_valuation(self):
        """Test order of vanishing at zero."""
        assert lambda_valuation(LAMBDA**2 * (1 + LAMBDA)) == 2
        assert lambda_valuation(3) == 0
        assert lambda_valuation(1 / LAMBDA) == -1

    def test_valuation_of_zero(self):
        """Test zero has no valuation."""
        with pytest.raises(UndefinedPowerError):
            lambda_valuation(0)

    def test_min_power_zero_matrix(self):
        """Test the zero matrix has no least power."""
        with pytest.raises(UndefinedPowerError):
            min_lambda_power(sympy.zeros(2, 2))

    def test_limit(self):
        """Test the leading coefficient matrix."""
        m = Matrix([[LAMBDA, LAMBDA**2], [0, 2 * LAMBDA + LAMBDA**3]])
        assert min_lambda_power(m) == 1
        assert lambda_limit(m) == Matrix([[1, 0], [0, 2]])


class TestRenderPoly:
    """Tests for polynomial rendering."""

    def test_grlex(self):
        """Test higher degree terms come first."""
        assert render_poly(x**2 * y - 3) == "x^2*y - 3"

    def test_signs(self):
        """Test leading minus and coefficients."""
        assert render_poly(-x + 2) == "-x + 2"
        assert render_poly(3 * y**5) == "3*y^5"

    def test_constants(self):
        """Test constant polynomials."""
        assert render_poly(0) == "0"
        assert render_poly(7) == "7"


class TestLinearAlgebra:
    """Tests for kernels and ranks."""

    def test_nullspace(self):
        """Test kernel vectors are annihilated."""
        m = Matrix([[1, 1, 0], [0, 0, 1]])
        basis = nullspace(m)
        assert len(basis) == 1
        assert m * basis[0] == sympy.zeros(2, 1)

    def test_nullspace_symbolic(self):
        """Test kernels over the fraction field."""
        m = Matrix([[x, y]])
        basis = nullspace(m)
        assert len(basis) == 1
        assert (m * basis[0]).applyfunc(sympy.cancel) == sympy.zeros(1, 1)

    def test_nullspace_no_rows(self):
        """Test an empty system has the full space as kernel."""
        assert len(nullspace(sympy.zeros(0, 3))) == 3

    def test_row_rank(self):
        """Test rank of a dependent system."""
        assert row_rank(Matrix([[1, 2], [2, 4]])) == 1
        assert row_rank(sympy.zeros(0, 2)) == 0
