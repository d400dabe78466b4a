"""Exact scalars: rationals, polynomials and rational functions in lambda.

All entries are sympy expressions with rational coefficients. Matrices are
``sympy.Matrix``. The distinguished parameter of a shrink is :data:`LAMBDA`.
"""

from typing import Iterable, List, Mapping, Union

import sympy
from sympy import Matrix, Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from ncres.errors import DomainError, UndefinedPowerError

LAMBDA = Symbol("lambda")

Scalar = Union[int, sympy.Expr]


def to_rational(value: Scalar) -> sympy.Rational:
    """Coerce to an exact rational, rejecting anything symbolic."""
    expr = sympy.nsimplify(value) if isinstance(value, float) else sympy.sympify(value)
    if not expr.is_Rational:
        raise DomainError(f"{value} is not a rational number")
    return expr


def symbols(names: Iterable[str]) -> tuple:
    return tuple(Symbol(n) for n in names)


def poly_add(p: sympy.Expr, q: sympy.Expr) -> sympy.Expr:
    return sympy.expand(p + q)


def poly_mul(p: sympy.Expr, q: sympy.Expr) -> sympy.Expr:
    return sympy.expand(p * q)


def eval_at_point(expr: sympy.Expr, point: Mapping[Union[str, Symbol], Scalar]) -> sympy.Rational:
    """Substitute rationals for every variable of ``expr``."""
    subs = {Symbol(k) if isinstance(k, str) else k: sympy.sympify(v) for k, v in point.items()}
    missing = sorted(str(s) for s in sympy.sympify(expr).free_symbols if s not in subs)
    if missing:
        raise DomainError(f"no value given for {', '.join(missing)}")
    value = sympy.sympify(expr).subs(subs)
    return to_rational(sympy.nsimplify(sympy.cancel(value)))


def is_zero(expr: Scalar) -> bool:
    return sympy.cancel(sympy.sympify(expr)) == 0


def matrix_is_zero(m: Matrix) -> bool:
    return all(is_zero(e) for e in m)


def _lambda_order(expr: sympy.Expr) -> int:
    monoms = Poly(expr, LAMBDA).monoms()
    return min(m[0] for m in monoms)


def lambda_valuation(expr: Scalar) -> int:
    """Order of vanishing at lambda = 0 (negative for poles)."""
    num, den = sympy.fraction(sympy.together(sympy.sympify(expr)))
    num = sympy.expand(num)
    if num == 0:
        raise UndefinedPowerError("zero has no least power of lambda")
    return _lambda_order(num) - _lambda_order(sympy.expand(den))


def min_lambda_power(m: Matrix) -> int:
    """Least power of lambda over all nonzero entries."""
    powers = [lambda_valuation(e) for e in m if not is_zero(e)]
    if not powers:
        raise UndefinedPowerError("zero matrix has no least power of lambda")
    return min(powers)


def lambda_limit(m: Matrix) -> Matrix:
    """``lim lambda^{-k} m`` as lambda -> 0, with k = min_lambda_power(m)."""
    k = min_lambda_power(m)
    scaled = m.applyfunc(lambda e: sympy.cancel(e * LAMBDA ** (-k)))
    return scaled.subs(LAMBDA, 0)


def _render_monomial(gens, exps) -> str:
    parts = []
    for g, e in zip(gens, exps):
        if e == 1:
            parts.append(str(g))
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


def render_poly(expr: Scalar) -> str:
    """Canonical text, terms in graded lexicographic order: ``x^2*y - 3``."""
    expr = sympy.expand(sympy.sympify(expr))
    if expr == 0:
        return "0"
    gens = sorted(expr.free_symbols, key=str)
    if not gens:
        return str(expr)
    if not expr.is_polynomial(*gens):
        return str(sympy.factor(expr))
    out = []
    for exps, coef in Poly(expr, *gens).terms(order="grlex"):
        mono = _render_monomial(gens, exps)
        mag = abs(coef)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if coef > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if coef > 0 else f"- {body}")
    return " ".join(out)


def nullspace(m: Matrix) -> List[Matrix]:
    """Column basis of the right kernel, computed over the fraction field of the entries."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [sympy.eye(m.cols).col(i) for i in range(m.cols)]
    basis = DomainMatrix.from_Matrix(Matrix(m)).to_field().nullspace().to_Matrix()
    return [basis.row(i).T.applyfunc(sympy.cancel) for i in range(basis.rows)]


def row_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return DomainMatrix.from_Matrix(Matrix(m)).to_field().rank()
