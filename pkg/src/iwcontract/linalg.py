"""Exact dense linear algebra over the scalar fields.

Matrices are lists of lists of Scalar (row major).  Everything here is
plain Gauss/Jordan elimination with exact division; sizes in this package
never exceed a few dozen rows, so nothing fancier is warranted.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldModeMismatch, SingularMatrixError
from .scalars import RATIONAL, Scalar


def zeros(rows, cols, mode=RATIONAL):
    z = Scalar.zero(mode)
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(n, mode=RATIONAL):
    m = zeros(n, n, mode)
    one = Scalar.one(mode)
    for i in range(n):
        m[i][i] = one
    return m


def from_rows(rows, mode=RATIONAL):
    return [[Scalar.of(x, mode) for x in row] for row in rows]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ai[0] * b[0][j]
            for p in range(1, k):
                acc = acc + ai[p] * b[p][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(1, len(v))), a[i][0] * v[0]) for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(matrix):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(rref(matrix)[0])


def nullspace(matrix, n_cols=None, mode=RATIONAL):
    """Basis of the right null space, one vector per free column."""
    if not matrix:
        n = n_cols or 0
        return [[Scalar.one(mode) if j == i else Scalar.zero(mode) for j in range(n)] for i in range(n)]
    n = len(matrix[0])
    mode = matrix[0][0].mode
    red, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Scalar.zero(mode)] * n
        v[fc] = Scalar.one(mode)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One exact solution of matrix @ x = rhs, or None if inconsistent.

    Returns (particular_solution, nullspace_basis).
    """
    rows = len(matrix)
    if rows == 0:
        return [], []
    n = len(matrix[0])
    aug = [matrix[i][:] + [rhs[i]] for i in range(rows)]
    red, pivots = rref(aug)
    mode = matrix[0][0].mode
    for r in range(len(red)):
        if all(red[r][c].is_zero() for c in range(n)) and not red[r][n].is_zero():
            return None
    x = [Scalar.zero(mode)] * n
    for r, pc in enumerate(pivots):
        if pc < n:
            x[pc] = red[r][n]
    return x, nullspace(matrix, n, mode)


def determinant(matrix):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    mode = matrix[0][0].mode
    m = [row[:] for row in matrix]
    det = Scalar.one(mode)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if not m[r][c].is_zero():
                pivot = r
                break
        if pivot is None:
            return Scalar.zero(mode)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for r in range(c + 1, n):
            if not m[r][c].is_zero():
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def inverse(matrix):
    n = len(matrix)
    mode = matrix[0][0].mode
    aug = [matrix[i][:] + [Scalar.one(mode) if j == i else Scalar.zero(mode) for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[: n if len(pivots) >= n else len(pivots)] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def span_rows(vectors):
    """Canonical (RREF) basis of the row span; drops zero rows."""
    if not vectors:
        return []
    red, _ = rref(vectors)
    return red


def span_dim(vectors):
    return len(span_rows(vectors))


def in_span(vector, basis):
    if not basis:
        return all(x.is_zero() for x in vector)
    return span_dim(basis) == span_dim(basis + [vector])


def symmetric_inertia(matrix):
    """Inertia (n_positive, n_negative, n_zero) of a symmetric rational matrix.

    Exact congruence diagonalization: repeatedly pick a nonzero diagonal
    pivot; if the remaining diagonal is all zero but some off-diagonal entry
    is not, a row+column addition creates a usable pivot.
    """
    n = len(matrix)
    if n and matrix[0][0].mode != RATIONAL:
        raise FieldModeMismatch("inertia requires rational mode")
    m = [[x.re for x in row] for row in matrix]
    pos = neg = 0
    live = list(range(n))
    while live:
        pivot = next((i for i in live if m[i][i] != 0), None)
        if pivot is None:
            found = None
            for a in live:
                for b in live:
                    if a != b and m[a][b] != 0:
                        found = (a, b)
                        break
                if found:
                    break
            if found is None:
                break
            a, b = found
            for j in range(n):
                m[a][j] += m[b][j]
            for i in range(n):
                m[i][a] += m[i][b]
            pivot = a
        d = m[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(pivot)
        for i in live:
            if m[i][pivot] != 0:
                f = Fraction(m[i][pivot], d)
                for j in range(n):
                    m[i][j] -= f * m[pivot][j]
                for j in range(n):
                    m[j][i] -= f * m[j][pivot]
    return pos, neg, n - pos - neg


def integer_kernel(matrix):
    """Basis of the integer kernel {x in Z^n : M x = 0} of an integer matrix.

    Column-style Hermite reduction of M stacked over the identity: integer
    column operations preserve the lattice generated by the stacked columns,
    and columns whose M part becomes zero carry a kernel basis in the
    identity part.
    """
    if not matrix:
        return []
    rows = len(matrix)
    n = len(matrix[0])
    work = [list(col) for col in zip(*matrix)]  # columns of M
    tail = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for i in range(rows):
        j = r
        while True:
            nonzero = [c for c in range(r, n) if work[c][i] != 0]
            if not nonzero:
                break
            c0 = min(nonzero, key=lambda c: abs(work[c][i]))
            work[r], work[c0] = work[c0], work[r]
            tail[r], tail[c0] = tail[c0], tail[r]
            done = True
            for c in range(r + 1, n):
                if work[c][i] != 0:
                    q = work[c][i] // work[r][i]
                    if q:
                        work[c] = [a - q * b for a, b in zip(work[c], work[r])]
                        tail[c] = [a - q * b for a, b in zip(tail[c], tail[r])]
                    if work[c][i] != 0:
                        done = False
            if done:
                r += 1
                break
        if r == n:
            break
    kernel = []
    for c in range(n):
        if all(v == 0 for v in work[c]):
            vec = tail[c]
            if any(vec):
                kernel.append(vec)
    return kernel
