"""Exact scalar arithmetic, binomial coefficients, and affine weights.

Every quantity in this package is an arbitrary-precision rational
(``fractions.Fraction``): always in lowest terms, denominator positive,
value-equality semantics, no rounding anywhere.  ``ExactScalar`` is the
name the rest of the code uses for that value type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

ExactScalar = Fraction

ZERO = ExactScalar(0)
ONE = ExactScalar(1)


def binom(n: int, k: int) -> ExactScalar:
    """Binomial coefficient C(n, k) with the zero convention.

    Returns 0 whenever k < 0, n < 0, or k > n, so that every splitting
    sum in the engine is total even at degenerate small degrees (no
    point-distributions exist there).
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    return ExactScalar(comb(n, k))


def is_integral(x: ExactScalar) -> bool:
    return x.denominator == 1


def format_exact(x: ExactScalar) -> str:
    """Render exactly: plain decimal for integers, ``p/q`` otherwise."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_exact(text: str) -> ExactScalar:
    """Parse the output of :func:`format_exact` (also accepts ``p/q``)."""
    return ExactScalar(text)


@dataclass(frozen=True)
class LinearWeight:
    """Integer-affine weight u(d1) = a*d1 + b.

    Affine weights are all the T-operator ever needs (the weights in
    actual use are 3*d1-1, 3*d1-2, 9*d1-2, d1, and 1), and restricting
    to them makes linearity a finitely checkable property.
    """

    a: int
    b: int

    def __call__(self, d1: int) -> ExactScalar:
        return ExactScalar(self.a * d1 + self.b)

    def __add__(self, other: "LinearWeight") -> "LinearWeight":
        return LinearWeight(self.a + other.a, self.b + other.b)

    def scaled(self, factor: int) -> "LinearWeight":
        return LinearWeight(factor * self.a, factor * self.b)


def eval_weight(u: LinearWeight, d1: int) -> ExactScalar:
    """Evaluate an affine weight at a positive integer argument."""
    return u(d1)


# Weights used by the invariant formulas and the audit suites.
WEIGHT_D1 = LinearWeight(1, 0)
WEIGHT_ONE = LinearWeight(0, 1)
WEIGHT_3D1_MINUS_1 = LinearWeight(3, -1)
WEIGHT_3D1_MINUS_2 = LinearWeight(3, -2)
WEIGHT_9D1_MINUS_2 = LinearWeight(9, -2)
