"""Exact dense linear algebra over Q(i) for small systems.

Plain Gaussian elimination: entries are GaussianRational, pivots are the
first nonzero entry in each column, everything stays exact.  Systems here
are small (coefficient matching for right-inverse construction, rank checks
of constant matrices), so no fraction-free refinement is needed.
"""

from __future__ import annotations

from .scalars import GaussianRational, ONE, ZERO

Matrix = list[list[GaussianRational]]


def _rref(rows: Matrix, width: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(a: Matrix) -> int:
    if not a:
        return 0
    rows = [list(row) for row in a]
    _, pivots = _rref(rows, len(a[0]))
    return len(pivots)


def solve_linear(a: Matrix, b: Matrix):
    """Solve a X = b exactly.

    Returns (particular solution, nullspace basis) where the particular
    solution is n x k and the basis is a list of length-n column vectors,
    or None when the system is inconsistent.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    k = len(b[0]) if b and b[0] else 0
    if len(b) != m:
        raise ValueError("right-hand side height mismatch")
    rows = [list(a[i]) + list(b[i]) for i in range(m)]
    rows, pivots = _rref(rows, n)
    pivot_set = set(pivots)
    # consistency: a zero coefficient row must have a zero right-hand side
    for i in range(len(pivots), m):
        if any(not x.is_zero() for x in rows[i][n:]):
            return None
    particular = [[ZERO] * k for _ in range(n)]
    for r, c in enumerate(pivots):
        for j in range(k):
            particular[c][j] = rows[r][n + j]
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [ZERO] * n
        vec[free] = ONE
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][free]
        basis.append(vec)
    return particular, basis
