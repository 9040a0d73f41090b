"""Exact linear algebra over Q, delegated to sympy."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence

import sympy


def to_sympy(c) -> sympy.Rational:
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.nsimplify(value)
    if not value.is_Rational:
        raise ValueError(f"expected a rational number, got {value}")
    return Fraction(int(value.p), int(value.q))


def solve_in_span(
    columns: Sequence[Mapping[Hashable, Fraction]], target: Mapping[Hashable, Fraction]
) -> list[Fraction] | None:
    """Find rationals ``u`` with ``sum_t u_t columns[t] == target``, or ``None``.

    Vectors are sparse dicts over arbitrary hashable coordinates.  Free
    parameters of the solution are set to zero.
    """
    coords = sorted({k for col in columns for k in col} | set(target), key=repr)
    if not coords:
        return [Fraction(0)] * len(columns)
    if not columns:
        return None if any(target.values()) else []
    index = {k: n for n, k in enumerate(coords)}
    M = sympy.zeros(len(coords), len(columns))
    for t, col in enumerate(columns):
        for k, c in col.items():
            M[index[k], t] = to_sympy(c)
    b = sympy.zeros(len(coords), 1)
    for k, c in target.items():
        b[index[k], 0] = to_sympy(c)
    try:
        sol, params = M.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [from_sympy(v) for v in sol]
