"""Exact rational phase-1 simplex with Bland's rule.

Only feasibility is needed here: is there an ``x`` with ``A x = b`` and
``0 <= x <= 1``?  That is exactly membership of ``b`` in the zonotope whose
generators are the columns of ``A``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError
from .linalg import shape, to_rat


def _pivot(T, r, c):
    row = T[r]
    inv = 1 / row[c]
    T[r] = row = [x * inv for x in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]


def box_feasible_point(A, b) -> list | None:
    """A point ``x`` with ``A x = b`` and every ``x_i`` in ``[0, 1]``, or ``None``.

    Standard-form phase 1: slacks ``s = 1 - x`` give the box rows an initial
    basis, artificials cover the equality rows, and the sum of artificials is
    minimized.  Bland's rule (smallest eligible index enters, smallest basic
    index breaks ratio ties) guarantees termination without perturbation.
    """
    m, n = shape(A)
    if len(b) != m:
        raise DimensionError(f"{m} equations but right-hand side of length {len(b)}")
    # columns: x_0..x_{n-1}, s_0..s_{n-1}, a_0..a_{m-1}, rhs
    width = 2 * n + m
    T = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * A[i][j]) for j in range(n)] + [Fraction(0)] * (n + m)
        row[2 * n + i] = Fraction(1)
        row.append(Fraction(sign * b[i]))
        T.append(row)
    for j in range(n):
        row = [Fraction(0)] * (width + 1)
        row[j] = Fraction(1)
        row[n + j] = Fraction(1)
        row[width] = Fraction(1)
        T.append(row)
    basis = [2 * n + i for i in range(m)] + [n + j for j in range(n)]

    # reduced costs of "minimize sum of artificials": minus the sum of the artificial rows
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for k in range(width + 1):
            cost[k] -= T[i][k]
    for i in range(m):
        cost[2 * n + i] = Fraction(0)
    T.append(cost)
    nrows = m + n

    while True:
        obj = T[nrows]
        enter = next((k for k in range(width) if obj[k] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(nrows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: the box keeps phase 1 bounded
            break
        # the objective row rides along as the last row of T
        _pivot(T, best[1], enter)
        basis[best[1]] = enter

    if T[nrows][width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][width]
    return [to_rat(v) for v in x]


def in_zonotope(A, p) -> bool:
    """Is ``p`` in the Minkowski sum of the segments ``[0, A_j]``?"""
    return box_feasible_point(A, p) is not None
