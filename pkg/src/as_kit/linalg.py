"""Exact linear algebra over Q and Z: fraction-free rank, integer kernels, HNF."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = ["integer_rows", "bareiss_rank", "integer_kernel", "hermite_normal_form", "primitive"]


def integer_rows(rows):
    """Scale each rational row by the lcm of its denominators (the row space is unchanged)."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        m = 1
        for x in row:
            m = lcm(m, x.denominator)
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows) -> int:
    """Rank of an integer (or rational) matrix by fraction-free elimination."""
    M = [list(r) for r in integer_rows(rows)]
    if not M:
        return 0
    n_rows, n_cols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pv = M[rank][col]
        for r in range(rank + 1, n_rows):
            f = M[r][col]
            for c in range(col, n_cols):
                # exact division is the Bareiss invariant
                M[r][c] = (pv * M[r][c] - f * M[rank][c]) // prev
        prev = pv
        rank += 1
        if rank == n_rows:
            break
    return rank


def primitive(v):
    """Divide by the gcd of the entries and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return list(v)
    v = [x // g for x in v]
    lead = next(x for x in v if x)
    return [-x for x in v] if lead < 0 else v


def integer_kernel(A):
    """Basis of {x in Z^n : A x = 0} for a rational m x n matrix A.

    Unimodular column operations bring A to column echelon form A U = [H | 0];
    the columns of U matching the zero columns span the integer kernel, and
    the basis is saturated (every primitive kernel vector is reachable).
    """
    A = integer_rows(A)
    if not A:
        return []
    m, n = len(A), len(A[0])
    A = [list(r) for r in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(a, b, p, q, r, s):
        # (col_a, col_b) <- (p*col_a + q*col_b, r*col_a + s*col_b)
        for M in (A, U):
            for row in M:
                x, y = row[a], row[b]
                row[a], row[b] = p * x + q * y, r * x + s * y

    pivot_col = 0
    for i in range(m):
        if pivot_col >= n:
            break
        for j in range(pivot_col + 1, n):
            if A[i][j] == 0:
                continue
            x, y = A[i][pivot_col], A[i][j]
            g, s, t = _xgcd(x, y)
            # [s t; -y/g x/g] is unimodular and clears A[i][j]
            col_op(pivot_col, j, s, t, -y // g, x // g)
        if A[i][pivot_col]:
            pivot_col += 1
    return [[U[r][c] for r in range(n)] for c in range(pivot_col, n)]


def _xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(rows):
    """Row-style Hermite normal form of an integer matrix, zero rows dropped.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).
    """
    M = [list(r) for r in rows]
    if not M:
        return []
    n_rows, n_cols = len(M), len(M[0])
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        for i in range(r + 1, n_rows):
            if M[i][c] == 0:
                continue
            a, b = M[r][c], M[i][c]
            g, s, t = _xgcd(a, b)
            ra, rb = M[r], M[i]
            M[r] = [s * x + t * y for x, y in zip(ra, rb)]
            M[i] = [(-b // g) * x + (a // g) * y for x, y in zip(ra, rb)]
        if M[r][c] == 0:
            continue
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        piv = M[r][c]
        for i in range(r):
            q = M[i][c] // piv
            if q:
                M[i] = [x - q * y for x, y in zip(M[i], M[r])]
        r += 1
    return [row for row in M[:r] if any(row)]
