"""Exact rational feasibility solver for systems a x >= b.

Phase-1 simplex over Fraction with Bland's rule; small and entirely
deterministic, which is all the wall-positivity certificates need.
"""

from __future__ import annotations

from fractions import Fraction


def feasible_point(a: list[list[int]], b: list[int]) -> list[Fraction] | None:
    """A rational x with a x >= b componentwise (x unrestricted), or None.

    Solved as phase-1 simplex on  a x+ - a x- - s + t = b,  x+-, s, t >= 0,
    minimising sum(t); rows with negative rhs are negated first so every
    right-hand side is nonnegative.
    """
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])
    rows = [[Fraction(x) for x in row] for row in a]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            slack_sign = Fraction(1)
        else:
            slack_sign = Fraction(-1)
        rows[i].append(slack_sign)  # marker consumed below

    # Column layout: x+ (n) | x- (n) | s (m) | t (m) | rhs.
    ncols = 2 * n + 2 * m + 1
    tab = []
    for i in range(m):
        slack_sign = rows[i].pop()
        row = [Fraction(0)] * ncols
        for j in range(n):
            row[j] = rows[i][j]
            row[n + j] = -rows[i][j]
        row[2 * n + i] = slack_sign
        row[2 * n + m + i] = Fraction(1)
        row[-1] = rhs[i]
        tab.append(row)
    basis = [2 * n + m + i for i in range(m)]

    # Objective: minimise sum of artificials == maximise -sum(t).
    obj = [Fraction(0)] * ncols
    for row in tab:
        obj = [o - x for o, x in zip(obj, row)]
    for i in range(m):
        obj[2 * n + m + i] = Fraction(0)

    while True:
        entering = next((j for j in range(ncols - 1) if obj[j] < 0), None)  # Bland
        if entering is None:
            break
        pivot_row = None
        best = None
        for i in range(m):
            if tab[i][entering] > 0:
                ratio = tab[i][-1] / tab[i][entering]
                key = (ratio, basis[i])  # Bland tie-break on basis index
                if best is None or key < best:
                    best = key
                    pivot_row = i
        if pivot_row is None:
            return None  # unbounded phase-1 cannot happen; defensive
        piv = tab[pivot_row][entering]
        tab[pivot_row] = [x / piv for x in tab[pivot_row]]
        for i in range(m):
            if i != pivot_row and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[pivot_row])]
        if obj[entering] != 0:
            f = obj[entering]
            obj = [x - f * y for x, y in zip(obj, tab[pivot_row])]
        basis[pivot_row] = entering

    if obj[-1] != 0:  # residual artificial mass: infeasible
        return None
    x = [Fraction(0)] * (2 * n)
    for i, bj in enumerate(basis):
        if bj < 2 * n:
            x[bj] = tab[i][-1]
    return [x[j] - x[n + j] for j in range(n)]
