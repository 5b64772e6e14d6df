"""Derivation algebras, diagonal derivations and admissible signatures.

A matrix G is a derivation when c[i][j][m] G[k][m] = c[m][j][k] G[m][i]
+ c[i][m][k] G[m][j] (summed over m) for all i, j, k; the derivations form
the null space of an n^2 x n^2 exact linear system.  Admissibility of an
exponent tuple for a contraction target means diag(tuple) is a derivation
in the canonical basis; for the shipped catalog this captures every
diagonalizable derivation up to automorphism, for other algebras it is a
necessary condition only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .scalars import Scalar
from .tensor import StructureTensor


@dataclass(frozen=True)
class DerivationBasis:
    n: int
    matrices: tuple  # each an n x n grid of Scalar, RREF-canonical as flat vectors

    @property
    def dim(self):
        return len(self.matrices)

    def to_json(self):
        return [[[x.to_json() for x in row] for row in m] for m in self.matrices]


def _derivation_rows(t: StructureTensor):
    """Rows of the linear system in the n^2 unknowns G[a][b] (row-major)."""
    n = t.n
    c = t.c
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [Scalar.zero(t.mode)] * (n * n)
                # + c_ij^m G[k][m]
                for m in range(n):
                    v = c[i][j][m]
                    if not v.is_zero():
                        row[k * n + m] = row[k * n + m] + v
                # - c_mj^k G[m][i] - c_im^k G[m][j]
                for m in range(n):
                    v = c[m][j][k]
                    if not v.is_zero():
                        row[m * n + i] = row[m * n + i] - v
                    v = c[i][m][k]
                    if not v.is_zero():
                        row[m * n + j] = row[m * n + j] - v
                rows.append(row)
    return rows


def derivation_basis(t: StructureTensor) -> DerivationBasis:
    n = t.n
    vectors = linalg.nullspace(_derivation_rows(t), n * n, t.mode)
    canonical = linalg.span_rows(vectors)
    matrices = tuple(
        tuple(tuple(vec[a * n + b] for b in range(n)) for a in range(n)) for vec in canonical
    )
    return DerivationBasis(n=n, matrices=matrices)


def is_derivation(t: StructureTensor, g) -> bool:
    """Exact check of the derivation identity on all basis pairs."""
    n = t.n
    if len(g) != n or any(len(row) != n for row in g):
        return False
    rows = [[Scalar.of(x, t.mode) for x in row] for row in g]
    flat = [rows[a][b] for a in range(n) for b in range(n)]
    for sys_row in _derivation_rows(t):
        acc = Scalar.zero(t.mode)
        for coeff, val in zip(sys_row, flat):
            if not coeff.is_zero():
                acc = acc + coeff * val
        if not acc.is_zero():
            return False
    return True


@dataclass(frozen=True)
class DiagonalLattice:
    """Integer tuples d with diag(d) a derivation in the canonical basis.

    The defining constraints are d_i + d_j = d_k for every nonzero c_ij^k,
    so the solution set is a sublattice of Z^n.
    """

    n: int
    constraints: tuple  # rows of the integer constraint matrix
    basis: tuple  # integer basis of the kernel lattice

    def contains(self, exponents) -> bool:
        if len(exponents) != self.n:
            return False
        return all(sum(r * e for r, e in zip(row, exponents)) == 0 for row in self.constraints)


def diagonal_lattice(t: StructureTensor) -> DiagonalLattice:
    n = t.n
    seen = set()
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if not t.c[i][j][k].is_zero():
                    row = [0] * n
                    row[i] += 1
                    row[j] += 1
                    row[k] -= 1
                    key = tuple(row)
                    if key not in seen:
                        seen.add(key)
                        rows.append(row)
    basis = linalg.integer_kernel(rows) if rows else [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return DiagonalLattice(n=n, constraints=tuple(map(tuple, rows)), basis=tuple(map(tuple, basis)))


def normalize_signature(exponents):
    """Sort non-increasing and divide by the gcd of the entries."""
    sig = tuple(sorted(exponents, reverse=True))
    g = 0
    for e in sig:
        g = gcd(g, e)
    if g > 1:
        sig = tuple(e // g for e in sig)
    return sig


def admissible_signatures(t: StructureTensor, max_exp: int):
    """Admissible exponent classes within the box [0, max_exp]^n.

    Enumerates the box, keeps tuples in the diagonal lattice, and
    deduplicates up to coordinate permutation and positive rescaling.
    Sorted ascending in the minimality order.
    """
    from .signatures import signature_sort_key  # local import to avoid a cycle

    if max_exp < 0:
        raise ValueError("max_exp must be nonnegative")
    lattice = diagonal_lattice(t)
    n = t.n
    classes = set()
    stack = [()]
    for _ in range(n):
        stack = [prefix + (v,) for prefix in stack for v in range(max_exp + 1)]
    for tup in stack:
        if lattice.contains(tup):
            classes.add(normalize_signature(tup))
    return sorted(classes, key=signature_sort_key)


def admissible_permutations(t: StructureTensor, signature):
    """All distinct permutations of the tuple that lie in the diagonal lattice."""
    from itertools import permutations

    lattice = diagonal_lattice(t)
    out = []
    for perm in sorted(set(permutations(signature)), reverse=True):
        if lattice.contains(perm):
            out.append(perm)
    return out
