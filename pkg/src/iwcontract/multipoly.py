"""Multivariate polynomials over the exact scalar fields.

Variables are short strings with a kind prefix: a-entries "a{i}{j}" of the
constant contraction factor, inverse entries "b{i}{j}", the determinant
slack "t", virtual unknowns "x...", and the localization variable "z".
A PolyRing fixes the variable tuple and the monomial order; polynomials
from different rings never mix (OrderMismatch).  Term maps are keyed by
exponent tuples with Scalar coefficients.
"""

from __future__ import annotations

from .errors import OrderMismatch
from .scalars import RATIONAL, Scalar

DEGREVLEX = "degrevlex"
LEX = "lex"


class PolyRing:
    __slots__ = ("vars", "order", "mode", "index", "_zero_exps")

    def __init__(self, variables, order=DEGREVLEX, mode=RATIONAL):
        if order not in (DEGREVLEX, LEX):
            raise ValueError(f"unknown monomial order {order!r}")
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variables")
        self.order = order
        self.mode = mode
        self.index = {v: i for i, v in enumerate(self.vars)}
        self._zero_exps = (0,) * len(self.vars)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.vars == other.vars
            and self.order == other.order
            and self.mode == other.mode
        )

    def __hash__(self):
        return hash((self.vars, self.order, self.mode))

    def __repr__(self):
        return f"PolyRing({len(self.vars)} vars, {self.order}, {self.mode})"

    # monomial order key: tuples compare lexicographically, so degrevlex is
    # (total degree, reversed negated exponents)
    def mono_key(self, exps):
        if self.order == LEX:
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        value = Scalar.of(value, self.mode)
        if value.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {self._zero_exps: value})

    def variable(self, name, power=1):
        i = self.index[name]
        exps = list(self._zero_exps)
        exps[i] = power
        return MultiPoly(self, {tuple(exps): Scalar.one(self.mode)})

    def monomial(self, coeff, **powers):
        coeff = Scalar.of(coeff, self.mode)
        if coeff.is_zero():
            return MultiPoly(self, {})
        exps = list(self._zero_exps)
        for name, p in powers.items():
            exps[self.index[name]] += p
        return MultiPoly(self, {tuple(exps): coeff})

    def extend(self, new_vars, order=None):
        """Same ring with extra variables appended."""
        return PolyRing(self.vars + tuple(new_vars), order or self.order, self.mode)


class MultiPoly:
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lead = None

    def _check(self, other):
        if self.ring != other.ring:
            raise OrderMismatch("polynomials from different rings")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, int):
                return self == self.ring.constant(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.ring.constant(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Scalar)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c = Scalar.of(other, self.ring.mode)
            if c.is_zero():
                return self.ring.zero()
            return MultiPoly(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                p = c1 * c2
                acc = out.get(m)
                s = p if acc is None else acc + p
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def lead(self):
        """(monomial, coeff) of the leading term under the ring order."""
        if self._lead is None and self.terms:
            key = self.ring.mono_key
            m = max(self.terms, key=key)
            self._lead = (m, self.terms[m])
        return self._lead

    def lead_monomial(self):
        lt = self.lead()
        return lt[0] if lt else None

    def lead_coeff(self):
        lt = self.lead()
        return lt[1] if lt else Scalar.zero(self.ring.mode)

    def monic(self):
        lt = self.lead()
        if lt is None or lt[1].is_one():
            return self
        inv = lt[1].inverse()
        return MultiPoly(self.ring, {m: c * inv for m, c in self.terms.items()})

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def evaluate(self, assignment):
        """Exact value at a full assignment {var_name: Scalar}."""
        values = []
        for name in self.ring.vars:
            if name not in assignment:
                raise KeyError(f"no value for variable {name}")
            values.append(Scalar.of(assignment[name], self.ring.mode))
        total = Scalar.zero(self.ring.mode)
        for m, c in self.terms.items():
            prod = c
            for e, v in zip(m, values):
                if e:
                    prod = prod * v**e
            total = total + prod
        return total

    def map_ring(self, ring):
        """Reinterpret in a ring that contains all variables of this one."""
        if ring == self.ring:
            return self
        positions = [ring.index[v] for v in self.ring.vars]
        width = len(ring.vars)
        out = {}
        for m, c in self.terms.items():
            exps = [0] * width
            for e, pos in zip(m, positions):
                if e:
                    exps[pos] = e
            out[tuple(exps)] = c
        return MultiPoly(ring, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        key = self.ring.mono_key
        parts = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            names = []
            for e, v in zip(m, self.ring.vars):
                if e == 1:
                    names.append(v)
                elif e > 1:
                    names.append(f"{v}^{e}")
            mono = "*".join(names)
            cs = str(c)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        key = self.ring.mono_key
        return [
            {"exponents": list(m), "coeff": self.terms[m].to_json()}
            for m in sorted(self.terms, key=key, reverse=True)
        ]

    @classmethod
    def from_json(cls, ring, data):
        terms = {}
        for item in data:
            m = tuple(int(e) for e in item["exponents"])
            if len(m) != len(ring.vars):
                raise ValueError("exponent vector length does not match ring")
            c = Scalar.from_json(item["coeff"], ring.mode)
            if not c.is_zero():
                terms[m] = c
        return cls(ring, terms)


class Ideal:
    """A finite generating set in a fixed ring, kept free of zero polynomials."""

    __slots__ = ("ring", "generators", "meta")

    def __init__(self, ring, generators, meta=None):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise OrderMismatch("generator from a different ring")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self.meta = dict(meta or {})

    def extended(self, extra_gens, meta=None):
        merged = dict(self.meta)
        merged.update(meta or {})
        return Ideal(self.ring, list(self.generators) + list(extra_gens), merged)

    def to_json(self):
        return {
            "schema_version": "1",
            "variables": list(self.ring.vars),
            "order": self.ring.order,
            "field": self.ring.mode,
            "generators": [g.to_json() for g in self.generators],
            "meta": self.meta,
        }

    @classmethod
    def from_json(cls, data):
        ring = PolyRing(data["variables"], data.get("order", DEGREVLEX), data.get("field", RATIONAL))
        gens = [MultiPoly.from_json(ring, g) for g in data["generators"]]
        return cls(ring, gens, data.get("meta"))

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring!r})"
