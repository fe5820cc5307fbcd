"""Throwaway reference implementations used to freeze golden values.

Everything here is written directly from the defining formulas, with no
imports from the ``severi`` package, so it stays an independent check of
the production code paths.  Run as a script to regenerate
``tests/golden/invariants_d12.json``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path

GOLDEN_PATH = Path(__file__).parent / "golden" / "invariants_d12.json"
GOLDEN_D_MAX = 12


def c(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def splittings(d: int):
    """Ordered pairs (d1, d2) of positive integers with d1 + d2 = d."""
    return ((d1, d - d1) for d1 in range(1, d))


@lru_cache(maxsize=None)
def n0(d: int) -> Fraction:
    # Degree-d irreducible rational curves through 3d-1 general points.
    if d == 1:
        return Fraction(1)
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += n0(d1) * n0(d2) * (
            d1 ** 2 * d2 ** 2 * c(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * c(3 * d - 4, 3 * d1 - 1)
        )
    return total


@lru_cache(maxsize=None)
def n1(d: int) -> Fraction:
    # Degree-d irreducible elliptic curves through 3d general points.
    total = Fraction(1, 12) * c(d, 3) * n0(d)
    for d1, d2 in splittings(d):
        total += (
            Fraction(3 * d1 - 2, 9)
            * d1 * d2
            * n0(d1) * n1(d2)
            * c(3 * d - 1, 3 * d1 - 1)
        )
    return total


def t_weighted(a: int, b: int, d: int) -> Fraction:
    # T(u) for the affine weight u(d1) = a*d1 + b.
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += (
            (a * d1 + b) * d1 * d2 * c(3 * d - 1, 3 * d1 - 1) * n0(d1) * n1(d2)
        )
    return total


def omega(d: int) -> Fraction:
    return Fraction(1, 12) * Fraction((d - 1) * (d - 2), 2) * n0(d)


def m_invariant(d: int) -> Fraction:
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += n0(d1) * n0(d2) * d1 * d2 * c(3 * d - 4, 3 * d1 - 2)
    return total / 2


def nodes(d: int) -> Fraction:
    # Reducible (nodal) fibres of the one-parameter rational family.
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += n0(d1) * n0(d2) * d1 * d2 * c(3 * d - 2, 3 * d1 - 1)
    return total / 2


def rcount(d: int) -> Fraction:
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += n0(d1) * n0(d2) * d1 * d2 * c(3 * d - 3, 3 * d1 - 2)
    return total


def lr(d: int) -> Fraction:
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += d2 * n0(d1) * n0(d2) * d1 * d2 * c(3 * d - 3, 3 * d1 - 2)
    return total


def k0(d: int) -> Fraction:
    # Assembly path: splitting statistics plus blow-down bookkeeping.
    return 3 * n0(d) - 3 * d * m_invariant(d) + 3 * lr(d) - rcount(d) - nodes(d)


def k0_printed(d: int) -> Fraction:
    # Literal closed form retained for the discrepancy probe.
    total = Fraction(0)
    for d1, d2 in splittings(d):
        total += n0(d1) * n0(d2) * d1 * d2 * (
            (3 * d2 - 2) * c(3 * d - 2, 3 * d1 - 2)
            - Fraction(3, 2) * c(3 * d - 4, 3 * d1 - 2)
        )
    return 3 * n0(d) - total


def k1(d: int) -> Fraction:
    if d < 3:
        return Fraction(0)
    return (
        3 * n1(d)
        + Fraction((d - 1) * (d - 2) * (d - 4), 8) * n0(d)
        + t_weighted(3, -2, d)
    )


def k1_via_c2(d: int) -> Fraction:
    return (
        3 * n1(d)
        + (3 * d - 12) * omega(d)
        + 3 * t_weighted(1, 0, d)
        - 2 * t_weighted(0, 1, d)
    )


def g0(d: int) -> Fraction:
    return (k0(d) - 2 * m_invariant(d) + 2) / 2


def g1(d: int) -> Fraction:
    rhs = (
        k1(d)
        - Fraction(9, 2) * n1(d)
        + Fraction((d - 1) * (d - 2) * (3 * d - 4), 24) * n0(d)
        + t_weighted(3, -2, d) / 2
    )
    return (rhs + 2) / 2


def ramification_residual(d: int) -> Fraction:
    # Residual of the candidate genus identity under the "9" reading of
    # its ambiguous middle coefficient; nonzero residuals are expected.
    lhs = 2 * g1(d) - 2 - k1(d)
    rhs = Fraction(1, 2) * (
        (3 * d - 9) * omega(d) - 9 * n1(d) + t_weighted(3, -2, d)
    )
    return lhs - rhs


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def golden_table(d_max: int = GOLDEN_D_MAX) -> dict:
    fns = {
        "n0": n0,
        "n1": n1,
        "omega": omega,
        "m": m_invariant,
        "nodes": nodes,
        "rcount": rcount,
        "lr": lr,
        "k0": k0,
        "k0_printed": k0_printed,
        "k1": k1,
        "k1_via_c2": k1_via_c2,
        "g0": g0,
        "g1": g1,
    }
    table = {
        name: {str(d): fmt(fn(d)) for d in range(1, d_max + 1)}
        for name, fn in fns.items()
    }
    table["ramification_residual"] = {
        str(d): fmt(ramification_residual(d)) for d in range(4, d_max + 1)
    }
    return table


if __name__ == "__main__":
    GOLDEN_PATH.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN_PATH.write_text(json.dumps(golden_table(), indent=2) + "\n")
    print(f"wrote {GOLDEN_PATH}")
