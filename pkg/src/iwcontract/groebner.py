"""Buchberger's algorithm with exact coefficients and optional cofactor tracking.

Strategy: normal selection with sugar tie-breaking, Gebauer-Moeller pair
pruning, monic reductions, full inter-reduction at the end.  The reduced
Groebner basis is canonical for a fixed ring, so the output is independent
of generator order.  Budgets cap the number of processed pairs and of
reduction steps; exceeding one raises BudgetExceeded (inconclusive, never
wrong).

With track=True every returned basis element carries its representation in
terms of the input generators, so membership facts extracted from the run
can be re-checked later by plain polynomial arithmetic.
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction

from .errors import BudgetExceeded, OrderMismatch
from .multipoly import MultiPoly, PolyRing
from .scalars import RATIONAL, Scalar

DEFAULT_MAX_PAIRS = 200_000
DEFAULT_MAX_STEPS = 20_000_000


def default_budget():
    """(max_pairs, max_steps), overridable via IWCONTRACT_GB_BUDGET="pairs:steps"."""
    raw = os.environ.get("IWCONTRACT_GB_BUDGET")
    if raw:
        try:
            pairs, steps = raw.split(":")
            return int(pairs), int(steps)
        except ValueError:
            pass
    return DEFAULT_MAX_PAIRS, DEFAULT_MAX_STEPS


# Engine polynomials are dicts {exponent tuple: coefficient}; coefficients
# are Fraction in rational mode and Scalar in gaussian mode.


def _to_internal(p: MultiPoly, rational: bool):
    if rational:
        return {m: c.re for m, c in p.terms.items()}
    return dict(p.terms)


def _from_internal(ring: PolyRing, d, rational: bool):
    if rational:
        return MultiPoly(ring, {m: Scalar(c, 0, RATIONAL) for m, c in d.items()})
    return MultiPoly(ring, dict(d))


def _mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def _mono_divides(m1, m2):
    return all(a <= b for a, b in zip(m1, m2))


def _mono_div(m1, m2):
    return tuple(a - b for a, b in zip(m1, m2))


def _mono_lcm(m1, m2):
    return tuple(a if a > b else b for a, b in zip(m1, m2))


def _mono_coprime(m1, m2):
    return all(a == 0 or b == 0 for a, b in zip(m1, m2))


class _Keyer:
    """Memoized monomial order keys for one ring."""

    __slots__ = ("cache", "lex")

    def __init__(self, ring):
        self.cache = {}
        self.lex = ring.order == "lex"

    def __call__(self, m):
        k = self.cache.get(m)
        if k is None:
            k = m if self.lex else (sum(m), tuple(-e for e in reversed(m)))
            self.cache[m] = k
        return k


class _Cofactors:
    """Representation vectors {generator index: poly dict} over the inputs."""

    @staticmethod
    def scale(cof, c):
        return {i: {m: v * c for m, v in p.items()} for i, p in cof.items()}

    @staticmethod
    def shift(cof, mono):
        return {i: {_mono_mul(m, mono): v for m, v in p.items()} for i, p in cof.items()}

    @staticmethod
    def sub_mul(cof, c, mono, other):
        """cof - c * x^mono * other, dropping zero entries."""
        out = {i: dict(p) for i, p in cof.items()}
        for i, p in other.items():
            tgt = out.setdefault(i, {})
            for m, v in p.items():
                mm = _mono_mul(m, mono)
                acc = tgt.get(mm)
                s = -(v * c) if acc is None else acc - v * c
                if not s:
                    tgt.pop(mm, None)
                else:
                    tgt[mm] = s
        return {i: p for i, p in out.items() if p}


class _Reducer:
    """Shared reduction state: order keys and the step budget."""

    def __init__(self, ring, max_steps):
        self.key = _Keyer(ring)
        self.rational = ring.mode == RATIONAL
        self.steps = 0
        self.max_steps = max_steps

    def normal_form(self, p, reducers, cof=None, reducer_cofs=None):
        """Full normal form of the dict p against [(lead, poly), ...].

        Maintains cof so that (tracked input) - sum(quotients * reducers)
        stays represented over the original generators.
        """
        key = self.key
        work = dict(p)
        remainder = {}
        while work:
            self.steps += 1
            if self.steps > self.max_steps:
                raise BudgetExceeded("reduction step budget exhausted")
            m = max(work, key=key)
            c = work.pop(m)
            hit = None
            for lm, g in reducers:
                if _mono_divides(lm, m):
                    hit = (lm, g)
                    break
            if hit is None:
                remainder[m] = c
                continue
            lm, g = hit
            quot_mono = _mono_div(m, lm)
            quot_coeff = c / g[lm]
            for gm, gc in g.items():
                if gm == lm:
                    continue
                mm = _mono_mul(gm, quot_mono)
                acc = work.get(mm)
                s = -(gc * quot_coeff) if acc is None else acc - gc * quot_coeff
                if not s:
                    work.pop(mm, None)
                else:
                    work[mm] = s
            if cof is not None:
                cof = _Cofactors.sub_mul(cof, quot_coeff, quot_mono, reducer_cofs[id(g)])
        return remainder, cof


class GroebnerBasis:
    """Reduced basis plus optional combination data over the input generators."""

    __slots__ = ("ring", "polys", "combinations", "stats")

    def __init__(self, ring, polys, combinations=None, stats=None):
        self.ring = ring
        self.polys = list(polys)
        self.combinations = combinations
        self.stats = stats or {}

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def contains_unit(self):
        return any(p.total_degree() == 0 for p in self.polys)

    def unit_combination(self):
        """Cofactors expressing 1 over the input generators, if tracked and unit."""
        if self.combinations is None:
            return None
        for p, comb in zip(self.polys, self.combinations):
            if p.total_degree() == 0:
                inv = p.lead_coeff().inverse()
                return {i: q * inv for i, q in comb.items()}
        return None

    def to_json(self):
        data = {
            "schema_version": "1",
            "variables": list(self.ring.vars),
            "order": self.ring.order,
            "field": self.ring.mode,
            "basis": [p.to_json() for p in self.polys],
        }
        if self.combinations is not None:
            data["combinations"] = [
                {str(i): q.to_json() for i, q in comb.items()} for comb in self.combinations
            ]
        return data

    @classmethod
    def from_json(cls, data):
        ring = PolyRing(data["variables"], data.get("order", "degrevlex"), data.get("field", RATIONAL))
        polys = [MultiPoly.from_json(ring, p) for p in data["basis"]]
        combos = None
        if "combinations" in data:
            combos = [
                {int(i): MultiPoly.from_json(ring, q) for i, q in comb.items()}
                for comb in data["combinations"]
            ]
        return cls(ring, polys, combos)


def buchberger(generators, ring=None, max_pairs=None, max_steps=None, track=False) -> GroebnerBasis:
    """Reduced Groebner basis (monic, sorted descending by leading monomial)."""
    gens = list(generators)
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise OrderMismatch("generator from a different ring")
    dp, ds = default_budget()
    max_pairs = dp if max_pairs is None else max_pairs
    max_steps = ds if max_steps is None else max_steps

    red = _Reducer(ring, max_steps)
    key = red.key
    rational = red.rational
    one = Fraction(1) if rational else Scalar.one(ring.mode)

    basis = []   # poly dicts, monic
    leads = []   # lead monomials
    sugars = []
    live = set()
    cof_of = {}  # id(poly dict) -> cofactor vector

    heap = []    # (sugar, lcm_key, i, j); lcm recomputed on pop
    dead = set()

    def live_reducers():
        return [(leads[i], basis[i]) for i in sorted(live)]

    def push_pairs(new_idx):
        lm_new = leads[new_idx]
        older = [i for i in sorted(live) if i != new_idx]
        fresh = []
        for i in older:
            lcm = _mono_lcm(leads[i], lm_new)
            fresh.append((i, lcm))
        # Gebauer-Moeller: drop old pairs strictly dominated by the new element
        for entry in list(heap):
            sugar, lcm_key, i, j = entry
            if (i, j) in dead:
                continue
            if i in live and j in live:
                lcm = _mono_lcm(leads[i], leads[j])
                if (
                    _mono_divides(lm_new, lcm)
                    and _mono_lcm(leads[i], lm_new) != lcm
                    and _mono_lcm(leads[j], lm_new) != lcm
                ):
                    dead.add((i, j))
        # prune fresh: M (dominated lcm), F (duplicate lcm), B1 (coprime leads)
        kept = []
        for i, lcm in fresh:
            if any(o_lcm != lcm and _mono_divides(o_lcm, lcm) for _, o_lcm in fresh):
                continue
            if any(o_lcm == lcm for _, o_lcm in kept):
                continue
            kept.append((i, lcm))
        for i, lcm in kept:
            if _mono_coprime(leads[i], lm_new):
                continue
            sugar = max(
                sugars[i] + sum(_mono_div(lcm, leads[i])),
                sugars[new_idx] + sum(_mono_div(lcm, lm_new)),
            )
            heapq.heappush(heap, (sugar, key(lcm), i, new_idx))

    def insert(p, cof, sugar_hint):
        lt = max(p, key=key)
        lc = p[lt]
        if lc != 1:
            inv = one / lc
            p = {m: c * inv for m, c in p.items()}
            if track:
                cof = _Cofactors.scale(cof, inv)
        idx = len(basis)
        basis.append(p)
        leads.append(lt)
        sugars.append(max(sugar_hint, max(sum(m) for m in p)))
        if track:
            cof_of[id(p)] = cof
        live.add(idx)
        push_pairs(idx)
        for i in list(live):
            if i != idx and _mono_divides(lt, leads[i]):
                live.discard(i)
        return idx

    # seed with the reduced generators
    for gi, g in enumerate(gens):
        if not g.terms:
            continue
        p = _to_internal(g, rational)
        cof = {gi: {ring._zero_exps: one}} if track else None
        remainder, cof = red.normal_form(p, live_reducers(), cof, cof_of)
        if remainder:
            insert(remainder, cof, max(sum(m) for m in p))

    processed = 0
    while heap:
        sugar, _, i, j = heapq.heappop(heap)
        if (i, j) in dead:
            continue
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(f"pair budget {max_pairs} exhausted")
        gi, gj = basis[i], basis[j]
        li, lj = leads[i], leads[j]
        lcm = _mono_lcm(li, lj)
        mi = _mono_div(lcm, li)
        mj = _mono_div(lcm, lj)
        spoly = {}
        for m, c in gi.items():
            spoly[_mono_mul(m, mi)] = c
        for m, c in gj.items():
            mm = _mono_mul(m, mj)
            acc = spoly.get(mm)
            s = -c if acc is None else acc - c
            if not s:
                spoly.pop(mm, None)
            else:
                spoly[mm] = s
        if not spoly:
            continue
        cof = None
        if track:
            cof = _Cofactors.sub_mul(_Cofactors.shift(cof_of[id(gi)], mi), one, mj, cof_of[id(gj)])
        remainder, cof = red.normal_form(spoly, live_reducers(), cof, cof_of)
        if remainder:
            insert(remainder, cof, sugar)
            if len(remainder) == 1 and sum(leads[-1]) == 0:
                break  # a unit was found; the ideal is the whole ring

    # canonical reduced basis: ascending by lead, tails reduced against the
    # already-finalized (smaller-lead) elements, which are the only possible
    # tail reducers
    final = []  # (lead, poly, cof)
    final_reducers = []
    for i in sorted(live, key=lambda i: key(leads[i])):
        cof = cof_of.get(id(basis[i])) if track else None
        remainder, cof = red.normal_form(basis[i], final_reducers, cof, cof_of)
        if not remainder:
            continue
        lt = max(remainder, key=key)
        lc = remainder[lt]
        if lc != 1:
            inv = one / lc
            remainder = {m: c * inv for m, c in remainder.items()}
            if track:
                cof = _Cofactors.scale(cof, inv)
        if track:
            cof_of[id(remainder)] = cof
        final.append((lt, remainder, cof))
        final_reducers.append((lt, remainder))

    if any(sum(lt) == 0 for lt, _, _ in final):
        final = [item for item in final if sum(item[0]) == 0]

    final.sort(key=lambda item: key(item[0]), reverse=True)
    out_polys = [_from_internal(ring, p, rational) for _, p, _ in final]
    out_cofs = None
    if track:
        out_cofs = [
            {i: _from_internal(ring, q, rational) for i, q in (cof or {}).items()} for _, _, cof in final
        ]
    return GroebnerBasis(ring, out_polys, out_cofs, stats={"pairs": processed, "steps": red.steps})


def reduce(p: MultiPoly, basis, max_steps=None) -> MultiPoly:
    """Normal form of p modulo a list of polynomials (or a GroebnerBasis)."""
    if isinstance(basis, GroebnerBasis):
        ring = basis.ring
        polys = basis.polys
    else:
        polys = list(basis)
        ring = polys[0].ring if polys else p.ring
    if p.ring != ring:
        raise OrderMismatch("polynomial and basis from different rings")
    red = _Reducer(ring, max_steps if max_steps is not None else default_budget()[1])
    internal = []
    for q in polys:
        if q:
            qq = _to_internal(q, red.rational)
            internal.append((max(qq, key=red.key), qq))
    remainder, _ = red.normal_form(_to_internal(p, red.rational), internal)
    return _from_internal(ring, remainder, red.rational)


def is_groebner(gb, max_steps=None) -> bool:
    """S-polynomial test: every pair reduces to zero against the basis."""
    polys = list(gb.polys if isinstance(gb, GroebnerBasis) else gb)
    if not polys:
        return True
    ring = polys[0].ring
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            li = polys[i].lead_monomial()
            lj = polys[j].lead_monomial()
            if _mono_coprime(li, lj):
                continue
            lcm = _mono_lcm(li, lj)
            si = polys[i] * MultiPoly(ring, {_mono_div(lcm, li): polys[i].lead_coeff().inverse()})
            sj = polys[j] * MultiPoly(ring, {_mono_div(lcm, lj): polys[j].lead_coeff().inverse()})
            if reduce(si - sj, polys, max_steps=max_steps):
                return False
    return True
