"""Exact linear algebra over the rationals: Gram matrices, rank, solving.

Rank uses fraction-free (Bareiss) elimination on denominator-cleared integer
rows, so no pivot tolerance exists anywhere.  Pivots are chosen as the first
nonzero entry in row-major order, which makes every run deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fock import inner_product


def gram_matrix(states) -> list[list[Fraction]]:
    """Pairwise factorial inner products of a list of rational vectors."""
    n = len(states)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = inner_product(states[i], states[j])
            g[i][j] = value
            g[j][i] = value
    return g


def _integer_rows(rows) -> list[list[int]]:
    cleared = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        cleared.append([int(f * scale) for f in fracs])
    return cleared


def exact_rank(rows) -> int:
    """Exact rank of a rational matrix via fraction-free elimination."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                # Bareiss update: division by the previous pivot is exact
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[row][c]) // prev_pivot
            m[r][col] = 0
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def solve_exact(rows, rhs) -> list[Fraction] | None:
    """One exact solution of A x = b over the rationals, or None if inconsistent.

    Free variables are set to zero.  Gauss-Jordan with first-nonzero pivoting.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivot_cols = []
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if aug[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        pivot = aug[row][col]
        aug[row] = [x / pivot for x in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == n_rows:
            break
    for r in range(row, n_rows):
        if aug[r][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for idx, col in enumerate(pivot_cols):
        solution[col] = aug[idx][n_cols]
    return solution
