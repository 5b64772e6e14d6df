"""Exact functions of the contraction parameter.

EpsPoly is a Laurent polynomial in the parameter (integer exponents,
possibly negative) with Scalar coefficients; EpsRational is a quotient of
two of them.  Quotients are kept lightly normalized (common parameter power
stripped, denominator leading coefficient 1) rather than fully reduced;
equality is decided by cross multiplication, and the order at zero is
well defined without gcd cancellation.
"""

from __future__ import annotations

import math

from .errors import NoLimitError, SingularMatrixError
from .scalars import RATIONAL, Scalar

INFINITE_ORDER = math.inf


class EpsPoly:
    """Laurent polynomial: map from integer exponent to nonzero Scalar."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs=None, mode=RATIONAL):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Scalar.of(c, mode) if not isinstance(c, Scalar) else c
                if not c.is_zero():
                    clean[int(exp)] = c
                    mode = c.mode
        self.coeffs = clean
        self.mode = mode

    @classmethod
    def constant(cls, value, mode=RATIONAL):
        value = Scalar.of(value, mode)
        return cls({0: value} if not value.is_zero() else {}, value.mode)

    @classmethod
    def monomial(cls, exponent, coeff=1, mode=RATIONAL):
        return cls({exponent: Scalar.of(coeff, mode)}, mode)

    def is_zero(self):
        return not self.coeffs

    def order(self):
        """Least exponent with nonzero coefficient; +inf for the zero polynomial."""
        if not self.coeffs:
            return INFINITE_ORDER
        return min(self.coeffs)

    def leading_low(self):
        """Coefficient at the order (lowest) exponent."""
        return self.coeffs[min(self.coeffs)]

    def shift(self, k):
        if k == 0 or not self.coeffs:
            return self
        return EpsPoly({e + k: c for e, c in self.coeffs.items()}, self.mode)

    def scale(self, s):
        if s.is_zero():
            return EpsPoly({}, self.mode)
        return EpsPoly({e: c * s for e, c in self.coeffs.items()}, self.mode)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc = out.get(e)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return EpsPoly(out, self.mode)

    def __neg__(self):
        return EpsPoly({e: -c for e, c in self.coeffs.items()}, self.mode)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                p = c1 * c2
                acc = out.get(e)
                s = p if acc is None else acc + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return EpsPoly(out, self.mode)

    def __eq__(self, other):
        return isinstance(other, EpsPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*e")
            else:
                parts.append(f"{c}*e^{e}")
        return " + ".join(parts)

    def to_json(self):
        return {str(e): c.to_json() for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data, mode=RATIONAL):
        return cls({int(e): Scalar.from_json(c, mode) for e, c in data.items()}, mode)


class EpsRational:
    """Quotient of Laurent polynomials, normalized for a unit denominator lead."""

    __slots__ = ("num", "den")

    def __init__(self, num: EpsPoly, den: EpsPoly = None):
        if den is None:
            den = EpsPoly.constant(1, num.mode)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = EpsPoly.constant(1, num.mode)
        else:
            shift = min(num.order(), den.order())
            if shift:
                num = num.shift(-shift)
                den = den.shift(-shift)
            lead = den.leading_low()
            if not lead.is_one():
                inv = lead.inverse()
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value, mode=RATIONAL):
        return cls(EpsPoly.constant(value, mode))

    @classmethod
    def monomial(cls, exponent, coeff=1, mode=RATIONAL):
        return cls(EpsPoly.monomial(exponent, coeff, mode))

    @property
    def mode(self):
        return self.num.mode if self.num.coeffs else self.den.mode

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return EpsRational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return EpsRational(-self.num, self.den)

    def __sub__(self, other):
        return EpsRational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return EpsRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return EpsRational(self.num * other.den, self.den * other.num)

    def inverse(self):
        return EpsRational.constant(1, self.mode) / self

    def __eq__(self, other):
        if not isinstance(other, EpsRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        if self.den == EpsPoly.constant(1, self.den.mode):
            return f"({self.num!r})"
        return f"({self.num!r})/({self.den!r})"


def ord_at_zero(f: EpsRational):
    """order(num) - order(den); +inf sentinel for the zero function."""
    if f.num.is_zero():
        return INFINITE_ORDER
    return f.num.order() - f.den.order()


def limit_at_zero(f: EpsRational) -> Scalar:
    """Limit as the parameter goes to +0; raises NoLimitError if divergent."""
    order = ord_at_zero(f)
    if order is INFINITE_ORDER or order > 0:
        return Scalar.zero(f.mode)
    if order < 0:
        raise NoLimitError(f"order at zero is {order}")
    return f.num.leading_low() / f.den.leading_low()


class EpsMatrix:
    """Square matrix of EpsRational entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        self.n = len(entries)
        for row in entries:
            if len(row) != self.n:
                raise ValueError("matrix must be square")
        self.entries = [list(row) for row in entries]

    @classmethod
    def from_scalar_matrix(cls, matrix):
        return cls([[EpsRational.constant(x, x.mode) for x in row] for row in matrix])

    @classmethod
    def diagonal_powers(cls, exponents, mode=RATIONAL):
        n = len(exponents)
        zero = EpsRational.constant(0, mode)
        rows = []
        for i in range(n):
            row = [zero] * n
            row[i] = EpsRational.monomial(exponents[i], 1, mode)
            rows.append(row)
        return cls(rows)

    @classmethod
    def identity(cls, n, mode=RATIONAL):
        return cls.diagonal_powers([0] * n, mode)

    @property
    def mode(self):
        return self.entries[0][0].mode

    def __mul__(self, other):
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return EpsMatrix(out)

    def __eq__(self, other):
        return (
            isinstance(other, EpsMatrix)
            and self.n == other.n
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )

    def determinant(self):
        n = self.n
        m = [row[:] for row in self.entries]
        mode = self.mode
        det = EpsRational.constant(1, mode)
        sign = 1
        for c in range(n):
            pivot = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
            if pivot is None:
                return EpsRational.constant(0, mode)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                sign = -sign
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for r in range(c + 1, n):
                if not m[r][c].is_zero():
                    f = m[r][c] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        if sign < 0:
            det = -det
        return det


def eps_matrix_inverse(matrix: EpsMatrix) -> EpsMatrix:
    """Exact inverse by Gauss-Jordan; raises SingularMatrixError when det = 0."""
    n = matrix.n
    mode = matrix.mode
    one = EpsRational.constant(1, mode)
    zero = EpsRational.constant(0, mode)
    aug = [matrix.entries[i][:] + [one if j == i else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("matrix of functions is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return EpsMatrix([row[n:] for row in aug])
