"""Smith normal form over the integers, with unimodular transforms.

Matrices are lists of lists of Python ints (exact, arbitrary precision).
"""

from __future__ import annotations

from typing import NamedTuple


def identity_matrix(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(rows)]
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    return [[sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p)] for i in range(n)]


def det_unimodular(m) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    prev = 1
    sgn = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sgn = -sgn
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sgn * a[n - 1][n - 1]


class SNFResult(NamedTuple):
    """diag: nonneg invariant factors (d_1 | d_2 | ...); U*A*V == D."""

    diag: tuple
    rank: int
    U: list
    V: list


def smith_normal_form(a) -> SNFResult:
    """Diagonalize an integer matrix: U*A*V = D with U, V unimodular.

    The diagonal entries are nonnegative and each divides the next.

    >>> smith_normal_form([[2, 4], [4, 4]]).diag
    (2, 4)
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(map(int, row)) for row in a]
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_add(i, j, k):  # row_i += k * row_j
        for t in range(cols):
            m[i][t] += k * m[j][t]
        for t in range(rows):
            u[i][t] += k * u[j][t]

    def col_add(i, j, k):  # col_i += k * col_j
        for t in range(rows):
            m[t][i] += k * m[t][j]
        for t in range(cols):
            v[t][i] += k * v[t][j]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for t in range(rows):
            m[t][i], m[t][j] = m[t][j], m[t][i]
        for t in range(cols):
            v[t][i], v[t][j] = v[t][j], v[t][i]

    def row_negate(i):
        for t in range(cols):
            m[i][t] = -m[i][t]
        for t in range(rows):
            u[i][t] = -u[i][t]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a nonzero entry of least magnitude in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])
        # euclidean reduction of the pivot row and column
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t] != 0:
                q = m[i][t] // m[t][t]
                row_add(i, t, -q)
                if m[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j] != 0:
                q = m[t][j] // m[t][t]
                col_add(j, t, -q)
                if m[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block for the divisibility chain
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        if m[t][t] < 0:
            row_negate(t)
        t += 1

    diag = tuple(m[i][i] for i in range(limit) if m[i][i] != 0)
    return SNFResult(diag, len(diag), u, v)


def matrix_rank(a) -> int:
    return smith_normal_form(a).rank


if __name__ == "__main__":
    import doctest

    doctest.testmod()
