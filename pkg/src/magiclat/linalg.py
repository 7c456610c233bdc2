"""Exact integer linear algebra: fraction-free (Bareiss) elimination.

Counts and coefficients must never touch floating point, so ranks are taken
over the integers and solves return ``fractions.Fraction`` values.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError


def row_echelon(rows):
    """Bareiss fraction-free elimination.

    Returns (echelon matrix, pivot column list).  Intermediate entries stay
    integral because each 2x2 determinant step divides exactly by the
    previous pivot.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    prev = 1
    pr = 0
    for pc in range(n_cols):
        pivot_row = next((i for i in range(pr, n_rows) if m[i][pc] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != pr:
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
        for i in range(pr + 1, n_rows):
            for j in range(pc + 1, n_cols):
                m[i][j] = (m[i][j] * m[pr][pc] - m[i][pc] * m[pr][j]) // prev
            m[i][pc] = 0
        prev = m[pr][pc]
        pivots.append(pc)
        pr += 1
        if pr == n_rows:
            break
    return m, pivots


def int_rank(rows) -> int:
    return len(row_echelon(rows)[1])


def solve_unique(rows, rhs) -> list[Fraction]:
    """Exact solution of A x = b for a system with a unique solution.

    A may have more rows than unknowns; raises ConsistencyError when the
    system is singular or inconsistent.
    """
    if not rows:
        raise ConsistencyError("empty linear system")
    n_unknowns = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    echelon, pivots = row_echelon(augmented)
    if n_unknowns in pivots:
        raise ConsistencyError("inconsistent linear system")
    if len(pivots) < n_unknowns:
        raise ConsistencyError("singular linear system")
    solution = [Fraction(0)] * n_unknowns
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        acc = Fraction(echelon[k][n_unknowns])
        for j in range(col + 1, n_unknowns):
            acc -= echelon[k][j] * solution[j]
        solution[col] = acc / echelon[k][col]
    return solution
