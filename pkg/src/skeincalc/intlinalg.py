"""Exact integer linear algebra: Smith normal form, solvability, cokernels.

Matrices are lists of lists of arbitrary-precision ints.  Everything here is
elementary row/column reduction; no floating point.
"""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(D, U, V) with U*mat*V = D, U and V unimodular.

    D is diagonal with nonnegative entries and each diagonal entry divides
    the next.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    D = [[int(x) for x in row] for row in mat]
    if any(len(row) != n for row in D):
        raise ValueError("matrix rows have unequal lengths")
    U = _identity(m)
    V = _identity(n)

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, c):
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j)
                       for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            # pivot isolated; pull in any entry it does not divide and redo
            pivot = D[t][t]
            culprit = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % pivot), None)
            if culprit is None:
                break
            add_row(t, culprit[0], 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def diagonal_entries(mat) -> list[int]:
    """Nonzero diagonal of the Smith form (the invariant factors, with 1s)."""
    D, _, _ = smith_normal_form(mat)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def cokernel(mat) -> tuple[int, list[int]]:
    """(free_rank, invariant factors > 1) of Z^rows / column-span(mat)."""
    m = len(mat)
    diag = diagonal_entries(mat) if m else []
    torsion = [d for d in diag if d > 1]
    return m - len(diag), torsion


def solve(mat, rhs) -> list[int] | None:
    """An integer solution x of mat @ x = rhs, or None when there is none."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")
    if m == 0:
        return [0] * n
    D, U, V = smith_normal_form(mat)
    c = [sum(U[i][j] * rhs[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = D[i][i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    if any(c[i] for i in range(min(m, n), m)):
        return None
    return [sum(V[i][j] * y[j] for j in range(n)) for i in range(n)]
