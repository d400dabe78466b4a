"""Hirzebruch-Jung continued fractions of cyclic quotient singularities."""

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

import sympy

from ncres.errors import InconsistencyError, ParameterError


@dataclass(frozen=True)
class HJData:
    """``r/b = a_1 - 1/(a_2 - 1/(...))`` and the staircase of lattice points ``(n, m)``."""
    r: int
    b: int
    coefficients: Tuple[int, ...]
    points: Tuple[Tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def value(self) -> sympy.Rational:
        """The continued fraction evaluated back to a rational."""
        acc = sympy.Integer(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            acc = a - 1 / acc
        return sympy.Rational(acc)

    def render(self) -> str:
        return "[" + ", ".join(str(a) for a in self.coefficients) + "]"


def boundary_points(r: int, b: int) -> List[Tuple[int, int]]:
    """Points ``(n, n*b mod r)``, ``1 <= n < r``, that no other point lies below and to the left of."""
    points = [(n, (n * b) % r) for n in range(1, r)]
    minimal = [
        (n, m) for n, m in points
        if not any(n2 <= n and m2 <= m and (n2, m2) != (n, m) for n2, m2 in points)
    ]
    return sorted(minimal, key=lambda p: p[1])


def hj_continued_fraction(r: int, b: int) -> HJData:
    """Ceiling expansion of ``r/b``, checked against the lattice staircase."""
    if not 1 <= b < r:
        raise ParameterError(f"need 1 <= b < r, got r={r}, b={b}")
    if gcd(r, b) != 1:
        raise ParameterError(f"gcd({r}, {b}) != 1")
    coefficients = []
    num, den = r, b
    while den:
        a = -(-num // den)
        coefficients.append(a)
        num, den = den, a * den - num
    data = HJData(r, b, tuple(coefficients), tuple(boundary_points(r, b)))
    if data.value() != sympy.Rational(r, b):
        raise InconsistencyError(f"{data.render()} does not evaluate to {r}/{b}")
    if len(data.points) != data.length:
        raise InconsistencyError(
            f"{r}/{b}: {len(data.points)} staircase points but continued fraction length {data.length}"
        )
    return data
