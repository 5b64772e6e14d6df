"""Exact scalar fields: rationals Q and Gaussian rationals Q(i).

A Scalar is an immutable field element tagged with its mode.  Rational mode
models computations over the reals, gaussian mode over the complexes; all
inputs in this toolkit are rational, so no further algebraic extensions are
needed.  Canonical form (coprime numerator/denominator, positive denominator)
is inherited from fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldModeMismatch

RATIONAL = "Q"
GAUSSIAN = "Q(i)"

_FRACTIONABLE = (int, Fraction)


class Scalar:
    __slots__ = ("re", "im", "mode")

    def __init__(self, re=0, im=0, mode=RATIONAL):
        re = Fraction(re)
        im = Fraction(im)
        if mode not in (RATIONAL, GAUSSIAN):
            raise ValueError(f"unknown field mode {mode!r}")
        if mode == RATIONAL and im != 0:
            raise FieldModeMismatch("rational-mode scalar with nonzero imaginary part")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, value, mode=RATIONAL):
        if isinstance(value, Scalar):
            if value.mode != mode:
                if value.mode == RATIONAL and mode == GAUSSIAN:
                    return cls(value.re, 0, GAUSSIAN)
                raise FieldModeMismatch(f"cannot reinterpret {value.mode} as {mode}")
            return value
        return cls(value, 0, mode)

    @classmethod
    def i(cls):
        return cls(0, 1, GAUSSIAN)

    @classmethod
    def zero(cls, mode=RATIONAL):
        return cls(0, 0, mode)

    @classmethod
    def one(cls, mode=RATIONAL):
        return cls(1, 0, mode)

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.mode != self.mode:
                raise FieldModeMismatch(f"{self.mode} vs {other.mode}")
            return other
        if isinstance(other, _FRACTIONABLE):
            return Scalar(other, 0, self.mode)
        return None

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_one(self):
        return self.re == 1 and self.im == 0

    def is_rational_valued(self):
        return self.im == 0

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.mode)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im, self.mode)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.im == 0 and other.im == 0:
            return Scalar(self.re * other.re, 0, self.mode)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.mode,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        if self.im == 0 and other.im == 0:
            return Scalar(self.re / other.re, 0, self.mode)
        norm = other.re * other.re + other.im * other.im
        return Scalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
            self.mode,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        return Scalar(1, 0, self.mode) / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar(1, 0, self.mode)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        return Scalar(self.re, -self.im, self.mode)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.mode == other.mode and self.re == other.re and self.im == other.im
        if isinstance(other, _FRACTIONABLE):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def sign(self):
        """Sign of a rational-valued scalar (-1, 0, 1)."""
        if self.im != 0:
            raise FieldModeMismatch("sign undefined for non-real scalar")
        return (self.re > 0) - (self.re < 0)

    # -- serialization -------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self.to_string()!r}, mode={self.mode!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self):
        if self.im == 0:
            return _frac_str(self.re)
        parts = []
        if self.re != 0:
            parts.append(_frac_str(self.re))
        im = _frac_str(self.im)
        if self.im == 1:
            term = "i"
        elif self.im == -1:
            term = "-i"
        else:
            term = f"{im}*i"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
        return "".join(parts)

    def to_json(self):
        """Rationals as "p/q" strings; gaussian values as {"re","im"} objects."""
        if self.mode == RATIONAL:
            return _frac_str(self.re)
        return {"re": _frac_str(self.re), "im": _frac_str(self.im)}

    @classmethod
    def from_json(cls, data, mode=None):
        if isinstance(data, dict):
            value = cls(Fraction(data["re"]), Fraction(data.get("im", 0)), GAUSSIAN)
            if mode == RATIONAL and value.im == 0:
                return cls(value.re, 0, RATIONAL)
            return value
        value = Fraction(str(data))
        return cls(value, 0, mode or RATIONAL)


def _frac_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch one of {+,-,*,/} on two scalars of the same mode."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "x"):
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown op {op!r}")
