"""Exact feasibility of ``A x = b, x >= 0`` by phase-one simplex.

The tableau is kept in integers with fraction-free (Bareiss) pivoting:
every stored entry equals the true rational entry times the current
pivot determinant ``d > 0``, and each update divides exactly by the
previous ``d``.  Entering and leaving variables follow Bland's rule, so the
method terminates on degenerate problems.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[list[int]]:
    rows = []
    for coeffs, rhs in zip(A, b):
        entries = [Fraction(v) for v in coeffs] + [Fraction(rhs)]
        scale = lcm(*(e.denominator for e in entries))
        ints = [int(e * scale) for e in entries]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        rows.append(ints)
    return rows


def find_feasible_point(
    A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> list[Fraction] | None:
    """Return a basic feasible solution of ``A x = b, x >= 0`` or ``None``.

    The returned point is a vertex of the feasible polyhedron.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = _integer_rows(A, b)

    # columns: n originals, m artificials, rhs
    width = n + m + 1
    T = []
    for i, r in enumerate(rows):
        art = [0] * m
        art[i] = 1
        T.append(r[:n] + art + [r[n]])
    # phase-one reduced costs for minimising the artificial sum
    obj = [-sum(T[i][j] for i in range(m)) for j in range(n)] + [0] * m
    obj.append(-sum(T[i][-1] for i in range(m)))
    T.append(obj)

    basis = [n + i for i in range(m)]
    d = 1
    while True:
        enter = next((j for j in range(n + m) if T[m][j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                # ratio T[i][rhs]/a, compared by cross-multiplication; ties -> lowest basic index
                if best is None:
                    leave, best = i, (T[i][-1], a)
                else:
                    lhs = T[i][-1] * best[1]
                    rhs = best[0] * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                        leave, best = i, (T[i][-1], a)
        if leave is None:  # unbounded direction; cannot happen for a bounded-below phase one
            raise ArithmeticError("phase-one objective unbounded")
        p = T[leave][enter]
        prow = T[leave]
        for i in range(m + 1):
            if i == leave:
                continue
            row = T[i]
            f = row[enter]
            if f == 0:
                T[i] = [(p * v) // d for v in row]
            else:
                T[i] = [(p * v - f * pv) // d for v, pv in zip(row, prow)]
        basis[leave] = enter
        d = p

    if T[m][-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = Fraction(T[i][-1], d)
    return x
