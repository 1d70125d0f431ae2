"""Exact linear algebra over ZZ and QQ used throughout the package.

Matrices are plain lists of lists (rows) holding ints or Fractions; nothing
here ever touches floating point.  All pivot choices are deterministic
(smallest absolute value, then smallest row/column index) so that downstream
outputs are reproducible byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = list
Mat = list


def identity(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Mat) -> Mat:
    return [list(row) for row in zip(*a)]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v: Vec, a: Mat) -> Vec:
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]) if a else 0)]


def dot(u: Vec, v: Vec) -> int:
    return sum(x * y for x, y in zip(u, v))


def gcd_vec(v: Vec) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def is_symmetric(a: Mat) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def det(a: Mat) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: Mat) -> int:
    """Rank over QQ via fraction Gaussian elimination."""
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_exact(a: Mat, b: Vec) -> list[Fraction] | None:
    """Unique rational solution x of a x = b for a full-column-rank system.

    Returns None when the (possibly overdetermined) system is inconsistent;
    raises ValueError when the solution is not unique.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(rows)]
    r = 0
    pivots = []
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(all(aug[i][c] == 0 for c in range(cols)) and aug[i][cols] != 0 for i in range(rows)):
        return None
    if len(pivots) < cols:
        raise ValueError("system is underdetermined")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def inverse_unimodular(a: Mat) -> Mat:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(a)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve_exact(a, e)
        if x is None:
            raise ValueError("matrix is singular")
        if any(f.denominator != 1 for f in x):
            raise ValueError("matrix is not unimodular")
        cols.append([int(f) for f in x])
    return transpose(cols)


def smith_normal_form(a: Mat) -> tuple[Mat, Mat, Mat]:
    """Smith normal form with transforms: returns (d, u, v) with u a v = d.

    d is diagonal with nonnegative entries satisfying d_i | d_{i+1}; u and v
    are unimodular.  Deterministic pivoting: smallest |entry|, then smallest
    row, then smallest column.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    u = identity(m)
    v = identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in d:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        pivot = min(
            ((abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j] != 0),
            default=None,
        )
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # Clear column t, then row t; restart if a smaller remainder shows up.
            dirty = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    row_op(i, t, q)
                    if d[i][t] != 0:  # remainder became the new, smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    col_op(j, t, q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(d[i][t] == 0 for i in range(t + 1, m)) and all(
                d[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # Divisibility chaining: pivot must divide the remaining block.
        offender = next(
            (
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if d[i][j] % d[t][t] != 0
            ),
            None,
        )
        if offender is not None:
            row_op(t, offender[0], -1)  # row_t += row_i, reintroduces column work
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def integer_kernel(a: Mat) -> Mat:
    """Basis (rows) of {x in ZZ^n : a x = 0}; the basis is saturated."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return identity(n)
    d, _, v = smith_normal_form(a)
    free = [j for j in range(n) if j >= m or d[j][j] == 0]
    return [[v[i][j] for i in range(n)] for j in free]


def solve_dot_one(a: Vec) -> Vec | None:
    """Integer y with a . y == 1, or None when gcd(a) != 1."""
    d, u, v = smith_normal_form([list(a)])
    if not d or d[0][0] != 1:
        return None
    y = [v[i][0] for i in range(len(a))]
    return y if u[0][0] == 1 else [-x for x in y]


def elementary_divisors_all_one(a: Mat) -> bool:
    """True iff every nonzero Smith invariant factor of a is 1 (full row count)."""
    m = len(a)
    d, _, _ = smith_normal_form(a)
    return all(d[i][i] == 1 for i in range(m))
