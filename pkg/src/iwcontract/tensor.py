"""Structure-constant tensors of Lie algebras and their invariants.

A StructureTensor stores the dense grid c[i][j][k] (0-based internally,
1-based in all I/O) with c[i][j][k] the coefficient of e_k in [e_i, e_j].
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import linalg
from .errors import DimensionMismatch, SingularMatrixError
from .scalars import GAUSSIAN, RATIONAL, Scalar


class StructureTensor:
    __slots__ = ("n", "mode", "c")

    def __init__(self, n, mode=RATIONAL, c=None):
        self.n = n
        self.mode = mode
        zero = Scalar.zero(mode)
        if c is None:
            self.c = [[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
        else:
            self.c = c

    @classmethod
    def from_brackets(cls, n, brackets, mode=RATIONAL):
        """Build from 1-based entries {(i, j, k): value} with i < j; antisymmetry is synthesized."""
        t = cls(n, mode)
        for (i, j, k), value in brackets.items():
            v = Scalar.of(value, mode)
            t.c[i - 1][j - 1][k - 1] = v
            t.c[j - 1][i - 1][k - 1] = -v
        return t

    def bracket_entries(self):
        """Nonzero constants as 1-based {(i, j, k): Scalar} with i < j."""
        out = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for k in range(self.n):
                    if not self.c[i][j][k].is_zero():
                        out[(i + 1, j + 1, k + 1)] = self.c[i][j][k]
        return out

    def bracket(self, x, y):
        """Bracket of coordinate vectors, [x, y]_k = sum c_ijk x_i y_j."""
        n = self.n
        out = [Scalar.zero(self.mode)] * n
        for i in range(n):
            xi = x[i]
            if xi.is_zero():
                continue
            for j in range(n):
                yj = y[j]
                if yj.is_zero():
                    continue
                row = self.c[i][j]
                for k in range(n):
                    if not row[k].is_zero():
                        out[k] = out[k] + row[k] * xi * yj
        return out

    def is_zero(self):
        return all(
            self.c[i][j][k].is_zero() for i in range(self.n) for j in range(self.n) for k in range(self.n)
        )

    def __eq__(self, other):
        return (
            isinstance(other, StructureTensor)
            and self.n == other.n
            and self.mode == other.mode
            and self.c == other.c
        )

    def complexify(self):
        if self.mode == GAUSSIAN:
            return self
        c = [[[Scalar(v.re, 0, GAUSSIAN) for v in row] for row in plane] for plane in self.c]
        return StructureTensor(self.n, GAUSSIAN, c)

    def to_json(self, name=None):
        data = {
            "dim": self.n,
            "field": self.mode,
            "brackets": [
                {"i": i, "j": j, "k": k, "c": v.to_json()} for (i, j, k), v in self.bracket_entries().items()
            ],
        }
        if name is not None:
            data["name"] = name
        return data

    @classmethod
    def from_json(cls, data):
        mode = data.get("field", RATIONAL)
        if mode not in (RATIONAL, GAUSSIAN):
            raise ValueError(f"unknown field {mode!r}")
        n = int(data["dim"])
        brackets = {}
        for item in data.get("brackets", []):
            i, j, k = int(item["i"]), int(item["j"]), int(item["k"])
            if not (1 <= i < j <= n and 1 <= k <= n):
                raise ValueError(f"bad bracket indices ({i},{j},{k}) for dim {n}")
            brackets[(i, j, k)] = Scalar.from_json(item["c"], mode)
        return cls.from_brackets(n, brackets, mode)

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self):
        entries = ", ".join(f"c[{i}{j}]^{k}={v}" for (i, j, k), v in self.bracket_entries().items())
        return f"StructureTensor(n={self.n}, {self.mode}, {entries or 'abelian'})"


def validate(t: StructureTensor):
    """All antisymmetry and Jacobi violations; empty list means a Lie algebra."""
    n = t.n
    c = t.c
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not (c[i][j][k] + c[j][i][k]).is_zero():
                    violations.append(("antisymmetry", (i + 1, j + 1, k + 1)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for kk in range(n):
                    acc = Scalar.zero(t.mode)
                    for m in range(n):
                        acc = (
                            acc
                            + c[i][j][m] * c[m][k][kk]
                            + c[k][i][m] * c[m][j][kk]
                            + c[j][k][m] * c[m][i][kk]
                        )
                    if not acc.is_zero():
                        violations.append(("jacobi", (i + 1, j + 1, k + 1, kk + 1)))
    return violations


def change_basis(t: StructureTensor, u):
    """Right action of an invertible constant matrix on the structure constants.

    c'[i'][j'][k'] = sum u[i][i'] u[j][j'] uinv[k'][k] c[i][j][k]: the columns
    of u are the new basis vectors in old coordinates.
    """
    n = t.n
    if len(u) != n:
        raise DimensionMismatch(f"matrix is {len(u)}x{len(u[0])}, tensor dim {n}")
    uinv = linalg.inverse(u)  # raises SingularMatrixError
    new = StructureTensor(n, t.mode)
    for ip in range(n):
        for jp in range(n):
            col_i = [u[i][ip] for i in range(n)]
            col_j = [u[j][jp] for j in range(n)]
            w = t.bracket(col_i, col_j)
            for kp in range(n):
                acc = Scalar.zero(t.mode)
                for k in range(n):
                    if not w[k].is_zero():
                        acc = acc + uinv[kp][k] * w[k]
                new.c[ip][jp][kp] = acc
    return new


def ad_matrix(t: StructureTensor, x):
    """Matrix of ad_x: (ad_x)[k][j] = coefficient of e_k in [x, e_j]."""
    n = t.n
    cols = []
    for j in range(n):
        basis_j = [Scalar.zero(t.mode)] * n
        basis_j[j] = Scalar.one(t.mode)
        cols.append(t.bracket(x, basis_j))
    return [[cols[j][k] for j in range(n)] for k in range(n)]


@dataclass(frozen=True)
class Fingerprint:
    """Basis-change invariants used to recognize catalog members."""

    derived_series: tuple
    lower_central_series: tuple
    center_dim: int
    killing_rank: int
    killing_inertia: tuple | None
    unimodular: bool

    def to_json(self):
        return {
            "derived_series": list(self.derived_series),
            "lower_central_series": list(self.lower_central_series),
            "center_dim": self.center_dim,
            "killing_rank": self.killing_rank,
            "killing_inertia": list(self.killing_inertia) if self.killing_inertia else None,
            "unimodular": self.unimodular,
        }


def _bracket_span(t, basis_a, basis_b):
    products = []
    for x in basis_a:
        for y in basis_b:
            products.append(t.bracket(x, y))
    return linalg.span_rows(products)


def fingerprint(t: StructureTensor) -> Fingerprint:
    n = t.n
    mode = t.mode
    full = linalg.identity(n, mode)

    derived = []
    current = full
    while True:
        current = _bracket_span(t, current, current)
        derived.append(len(current))
        if len(derived) >= 2 and derived[-1] == derived[-2]:
            break
        if derived[-1] == 0:
            break

    lower = []
    current = _bracket_span(t, full, full)
    lower.append(len(current))
    while lower[-1] != 0:
        current = _bracket_span(t, full, current)
        lower.append(len(current))
        if len(lower) >= 2 and lower[-1] == lower[-2]:
            break

    # center: x with [x, e_j] = 0 for all j -> rows indexed by (j, k)
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([t.c[i][j][k] for i in range(n)])
    center_dim = len(linalg.nullspace(rows, n, mode))

    killing = [[Scalar.zero(mode) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = Scalar.zero(mode)
            for k in range(n):
                for m in range(n):
                    acc = acc + t.c[i][k][m] * t.c[j][m][k]
            killing[i][j] = acc
            killing[j][i] = acc
    killing_rank = linalg.rank(killing)
    inertia = None
    if mode == RATIONAL:
        pos, neg, _ = linalg.symmetric_inertia(killing)
        inertia = (pos, neg)

    unimodular = True
    for i in range(n):
        trace = Scalar.zero(mode)
        for k in range(n):
            trace = trace + t.c[i][k][k]
        if not trace.is_zero():
            unimodular = False
            break

    return Fingerprint(
        derived_series=tuple(derived),
        lower_central_series=tuple(lower),
        center_dim=center_dim,
        killing_rank=killing_rank,
        killing_inertia=inertia,
        unimodular=unimodular,
    )
