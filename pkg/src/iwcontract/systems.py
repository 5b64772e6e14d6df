"""Polynomial systems encoding generalized IW-existence for a (source, target,
signature) triple, plus the hand-derived fixture systems.

With U = A W P, P = I and W = diag(eps^a1, ..., eps^an), each transformed
constant carries a single power s = a_i + a_j - a_k of the parameter whose
coefficient is L_ijk = sum a[i',i] a[j',j] b[k,k'] c_src[i',j',k'] with
B = A^{-1}.  The limit exists and equals the target exactly when

    s < 0:  L_ijk = 0          (and the target constant there must be 0)
    s = 0:  L_ijk = c_tgt[i,j,k]
    s > 0:  no condition        (but the target constant there must be 0)

Three encodings of B and of nonsingularity are provided:

  explicit-inverse: fresh b-variables for the used columns of B, closed by
      the corresponding columns of A B = I, with a det-slack t det(A) = 1
      (columns of A B = I alone do not force invertibility);
  cofactor: b entries replaced by adjugate entries of A plus det(A) = 1
      (sound for sources with a determinant-surjective automorphism family,
      which holds for every shipped catalog source);
  virtual: the b-free column form [a_i, a_j] = sum_k coeff_k a_k with fresh
      virtual unknowns at the free (s > 0) slots and t det(A) = 1.
"""

from __future__ import annotations

from itertools import permutations as _perms

from .errors import DimensionMismatch, UnknownFixtureError
from .multipoly import DEGREVLEX, Ideal, MultiPoly, PolyRing
from .scalars import Scalar
from .tensor import StructureTensor

COFACTOR = "cofactor"
EXPLICIT_INVERSE = "explicit-inverse"
VIRTUAL = "virtual"


def a_var(i, j):
    return f"a{i}{j}"


def b_var(i, j):
    return f"b{i}{j}"


def _sym_matrix(ring, n, name):
    return [[ring.variable(f"{name}{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]


def sym_det(m):
    """Determinant of a matrix of polynomials by permutation expansion."""
    n = len(m)
    ring = m[0][0].ring
    total = ring.zero()
    for perm in _perms(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = ring.constant(sign)
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def sym_adjugate(m):
    """Adjugate: adj[i][j] = (-1)^(i+j) * minor(m, delete row j, col i)."""
    n = len(m)
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            cof = sym_det(minor) if minor else m[0][0].ring.one()
            if (i + j) % 2:
                cof = -cof
            row.append(cof)
        adj.append(row)
    return adj


def _transformed_brackets(source: StructureTensor, a):
    """w[(i, j)][k'] = coefficient polynomials of the source bracket of columns i, j."""
    n = source.n
    ring = a[0][0].ring
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = [ring.zero() for _ in range(n)]
            for ip in range(n):
                for jp in range(n):
                    row = source.c[ip][jp]
                    for kp in range(n):
                        v = row[kp]
                        if not v.is_zero():
                            w[kp] = w[kp] + a[ip][i] * a[jp][j] * v
            out[(i, j)] = w
    return out


def _slot_exponent(sig, i, j, k):
    return sig[i] + sig[j] - sig[k]


def generate_iw_system(
    source: StructureTensor,
    target: StructureTensor,
    signature,
    mode: str = COFACTOR,
    order: str = DEGREVLEX,
) -> Ideal:
    """Ideal whose solutions are the admissible constant factors A (with P = I)."""
    n = source.n
    if target.n != n:
        raise DimensionMismatch("source and target dimensions differ")
    if len(signature) != n:
        raise DimensionMismatch("signature length does not match dimension")
    if source.mode != target.mode:
        raise DimensionMismatch("source and target field modes differ")
    sig = tuple(int(s) for s in signature)
    field = source.mode

    a_names = [a_var(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    meta = {
        "kind": "generated",
        "mode": mode,
        "signature": list(sig),
        "dim": n,
    }

    if mode == VIRTUAL:
        return _generate_virtual(source, target, sig, order, a_names, meta)

    if mode == EXPLICIT_INVERSE:
        used_cols = sorted(
            {
                k + 1
                for i in range(n)
                for j in range(i + 1, n)
                for k in range(n)
                if _slot_exponent(sig, i, j, k) <= 0
            }
        )
        b_names = [b_var(i, c) for c in used_cols for i in range(1, n + 1)]
        ring = PolyRing(a_names + b_names + ["t"], order, field)
    elif mode == COFACTOR:
        ring = PolyRing(a_names, order, field)
    else:
        raise ValueError(f"unknown system mode {mode!r}")

    a = _sym_matrix(ring, n, "a")
    w = _transformed_brackets(source, a)
    det = sym_det(a)

    if mode == COFACTOR:
        adj = sym_adjugate(a)
        b_entry = lambda k, kp: adj[k][kp]  # noqa: E731
    else:
        b_entry = lambda k, kp: ring.variable(b_var(k + 1, kp + 1))  # noqa: E731

    gens = []
    forced_contradiction = False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                s = _slot_exponent(sig, i, j, k)
                c0 = target.c[i][j][k]
                if s > 0:
                    if not c0.is_zero():
                        forced_contradiction = True
                    continue
                lhs = ring.zero()
                for kp in range(n):
                    if w[(i, j)][kp]:
                        lhs = lhs + b_entry(k, kp) * w[(i, j)][kp]
                if s < 0:
                    gens.append(lhs)
                    if not c0.is_zero():
                        forced_contradiction = True
                else:
                    rhs = ring.constant(c0)
                    if mode == COFACTOR:
                        rhs = rhs * det
                    gens.append(lhs - rhs)

    if mode == COFACTOR:
        gens.append(det - ring.one())
        meta["nonsingularity"] = "det(A) = 1"
    else:
        for c in (used_cols if mode == EXPLICIT_INVERSE else []):
            for i in range(1, n + 1):
                acc = ring.zero()
                for k in range(1, n + 1):
                    acc = acc + ring.variable(a_var(i, k)) * ring.variable(b_var(k, c))
                if i == c:
                    acc = acc - ring.one()
                gens.append(acc)
        gens.append(ring.variable("t") * det - ring.one())
        meta["nonsingularity"] = "A B columns + t det(A) = 1"
        meta["b_columns"] = used_cols

    if forced_contradiction:
        # a nonzero target constant sits at a slot the limit forces to zero
        gens.append(ring.one())
        meta["forced_contradiction"] = True
    gens = [g for g in gens if g]
    return Ideal(ring, gens, meta)


def virtual_var(i, j, k):
    return f"x{i}{j}k{k}"


def _generate_virtual(source, target, sig, order, a_names, meta):
    n = source.n
    field = source.mode
    # virtual variables for free slots, only on pairs that carry a condition
    pair_slots = {}
    x_names = []
    for i in range(n):
        for j in range(i + 1, n):
            slots = [_slot_exponent(sig, i, j, k) for k in range(n)]
            if all(s > 0 for s in slots):
                continue  # unconstrained pair
            pair_slots[(i, j)] = slots
            for k in range(n):
                if slots[k] > 0:
                    x_names.append(virtual_var(i + 1, j + 1, k + 1))
    ring = PolyRing(a_names + x_names + ["t"], order, field)
    a = _sym_matrix(ring, n, "a")
    w = _transformed_brackets(source, a)
    gens = []
    forced_contradiction = False
    for (i, j), slots in pair_slots.items():
        coeffs = []
        for k in range(n):
            c0 = target.c[i][j][k]
            if slots[k] > 0:
                coeffs.append(ring.variable(virtual_var(i + 1, j + 1, k + 1)))
                if not c0.is_zero():
                    forced_contradiction = True
            elif slots[k] < 0:
                coeffs.append(ring.zero())
                if not c0.is_zero():
                    forced_contradiction = True
            else:
                coeffs.append(ring.constant(c0))
        for m in range(n):
            acc = w[(i, j)][m]
            for k in range(n):
                if coeffs[k]:
                    acc = acc - coeffs[k] * ring.variable(a_var(m + 1, k + 1))
            if acc:
                gens.append(acc)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in pair_slots:
                continue
            for k in range(n):
                if not target.c[i][j][k].is_zero():
                    forced_contradiction = True
    det = sym_det(a)
    gens.append(ring.variable("t") * det - ring.one())
    if forced_contradiction:
        gens.append(ring.one())
        meta["forced_contradiction"] = True
    meta["nonsingularity"] = "t det(A) = 1"
    meta["virtual_pairs"] = sorted((i + 1, j + 1) for (i, j) in pair_slots)
    return Ideal(ring, gens, meta)


# -- hand-derived fixture systems ---------------------------------------------


def _fixture_ring(b_cols, extra=(), order=DEGREVLEX):
    a_names = [a_var(i, j) for i in range(1, 5) for j in range(1, 5)]
    b_names = [b_var(i, c) for c in b_cols for i in range(1, 5)]
    return PolyRing(a_names + b_names + list(extra), order)


def _m12(ring, i, j):
    return ring.variable(a_var(1, i)) * ring.variable(a_var(2, j)) - ring.variable(
        a_var(2, i)
    ) * ring.variable(a_var(1, j))


def _m34(ring, i, j):
    return ring.variable(a_var(3, i)) * ring.variable(a_var(4, j)) - ring.variable(
        a_var(4, i)
    ) * ring.variable(a_var(3, j))


def _closure(ring, cols):
    gens = []
    for c in cols:
        for i in range(1, 5):
            acc = ring.zero()
            for k in range(1, 5):
                acc = acc + ring.variable(a_var(i, k)) * ring.variable(b_var(k, c))
            if i == c:
                acc = acc - ring.one()
            gens.append(acc)
    return gens


def _a_matrix(ring):
    return _sym_matrix(ring, 4, "a")


def _g32_common(ring):
    """The shared 2x2 block system: rows 2,3 of B against the (2,4)/(3,4) minors."""
    y11, y21 = _m12(ring, 2, 4), _m34(ring, 2, 4)
    y12, y22 = _m12(ring, 3, 4), _m34(ring, 3, 4)
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    return [
        b(2, 1) * y11 + b(2, 3) * y21 - 1,
        b(2, 1) * y12 + b(2, 3) * y22 - 1,
        b(3, 1) * y11 + b(3, 3) * y21,
        b(3, 1) * y12 + b(3, 3) * y22 - 1,
    ]


def _fixture_g32_regime1():
    ring = _fixture_ring((1, 3))
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    p14, q14 = _m12(ring, 1, 4), _m34(ring, 1, 4)
    gens = [b(i, 1) * p14 + b(i, 3) * q14 for i in (1, 2, 3)]
    gens += _g32_common(ring)
    gens += _closure(ring, (1, 3))
    gens.append(sym_det(_a_matrix(ring)) - ring.one())
    meta = {
        "kind": "fixture",
        "id": "G32-regime1",
        "pair": ["2g2.1", "g1+g3.2"],
        "signature": [1, 2, 2, 0],
        "note": (
            "block-exponent regime alpha > beta > 0; the annihilated column is the "
            "minor pair (m12(1,4), m34(1,4)) - the transcribed hand derivation prints "
            "the first minor twice by typo, the structural pair is used here; its two "
            "proportionality factors are distinct symbols"
        ),
    }
    return Ideal(ring, gens, meta)


def _fixture_g32_regime2():
    ring = _fixture_ring((1, 3))
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    gens = list(_g32_common(ring))
    for j in (1, 2, 3):
        gens.append(b(1, 1) * _m12(ring, j, 4) + b(1, 3) * _m34(ring, j, 4))
    gens += _closure(ring, (1, 3))
    gens.append(sym_det(_a_matrix(ring)) - ring.one())
    meta = {
        "kind": "fixture",
        "id": "G32-regime2",
        "pair": ["2g2.1", "g1+g3.2"],
        "signature": [3, 2, 2, 0],
        "note": "block-exponent regime beta > alpha > 0 with 2 alpha > beta",
    }
    return Ideal(ring, gens, meta)


def _g41_4321_gens(ring):
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    p34, q34 = _m12(ring, 3, 4), _m34(ring, 3, 4)
    return [
        b(1, 1) * p34 + b(1, 3) * q34,
        b(2, 1) * p34 + b(2, 3) * q34 - 1,
        b(1, 1) * _m12(ring, 2, 4) + b(1, 3) * _m34(ring, 2, 4) - 1,
    ]


def _fixture_g41_4321():
    ring = _fixture_ring((1, 3))
    gens = _g41_4321_gens(ring)
    gens += _closure(ring, (1, 3))
    gens.append(sym_det(_a_matrix(ring)) - ring.one())
    meta = {
        "kind": "fixture",
        "id": "G41-4321",
        "pair": ["2g2.1", "g4.1"],
        "signature": [4, 3, 2, 1],
        "feasible": True,
    }
    return Ideal(ring, gens, meta)


def _fixture_g41_3211():
    ring = _fixture_ring((1, 3))
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    gens = _g41_4321_gens(ring)
    gens.append(b(1, 1) * _m12(ring, 2, 3) + b(1, 3) * _m34(ring, 2, 3))
    gens += _closure(ring, (1, 3))
    gens.append(sym_det(_a_matrix(ring)) - ring.one())
    meta = {
        "kind": "fixture",
        "id": "G41-3211",
        "pair": ["2g2.1", "g4.1"],
        "signature": [3, 2, 1, 1],
        "feasible": True,
    }
    return Ideal(ring, gens, meta)


def _fixture_g41_2101():
    ring = _fixture_ring((1, 3), extra=("t",))
    b = lambda i, c: ring.variable(b_var(i, c))  # noqa: E731
    y11, y21 = _m12(ring, 2, 3), _m34(ring, 2, 3)
    y12, y22 = _m12(ring, 3, 4), _m34(ring, 3, 4)
    gens = [
        b(1, 1) * _m12(ring, 1, 3) + b(1, 3) * _m34(ring, 1, 3),
        b(1, 1) * y11 + b(1, 3) * y21,
        b(2, 1) * y11 + b(2, 3) * y21,
        b(4, 1) * y11 + b(4, 3) * y21,
        b(1, 1) * y12 + b(1, 3) * y22,
        b(2, 1) * y12 + b(2, 3) * y22 - 1,
        b(4, 1) * y12 + b(4, 3) * y22,
        b(1, 1) * _m12(ring, 2, 4) + b(1, 3) * _m34(ring, 2, 4) - 1,
    ]
    gens += _closure(ring, (1, 3))
    gens.append(ring.variable("t") * sym_det(_a_matrix(ring)) - ring.one())
    meta = {
        "kind": "fixture",
        "id": "G41-2101",
        "pair": ["2g2.1", "g4.1"],
        "signature": [2, 1, 0, 1],
        "feasible": False,
    }
    return Ideal(ring, gens, meta)


def _fixture_so3_2101():
    a_names = [a_var(i, j) for i in range(1, 5) for j in range(1, 5)]
    ring = PolyRing(a_names + ["x1", "x2", "t"], DEGREVLEX)
    av = lambda i, j: ring.variable(a_var(i, j))  # noqa: E731

    def cross(m, i, j):
        # component m of the cross product of the so3 parts of columns i, j
        p, q = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[m]
        return av(p, i) * av(q, j) - av(q, i) * av(p, j)

    x1, x2 = ring.variable("x1"), ring.variable("x2")
    gens = [
        cross(1, 2, 3) - x1 * av(1, 3),
        cross(2, 2, 3) - x1 * av(2, 3),
        cross(3, 2, 3) - x1 * av(3, 3),
        x1 * av(4, 3),
        cross(1, 3, 4) - av(1, 2) - x2 * av(1, 3),
        cross(2, 3, 4) - av(2, 2) - x2 * av(2, 3),
        cross(3, 3, 4) - av(3, 2) - x2 * av(3, 3),
        av(4, 2) + x2 * av(4, 3),
        ring.variable("t") * sym_det(_a_matrix(ring)) - ring.one(),
    ]
    meta = {
        "kind": "fixture",
        "id": "SO3-2101",
        "pair": ["so3+A1", "A4.1"],
        "signature": [2, 1, 0, 1],
        "feasible": False,
        "real_branch": {"x_var": "x1", "column_vars": ["a13", "a23", "a33"]},
        "note": "column form with virtual unknowns x1, x2; infeasible over the reals only",
    }
    return Ideal(ring, gens, meta)


_FIXTURES = {
    "G32-regime1": _fixture_g32_regime1,
    "G32-regime2": _fixture_g32_regime2,
    "G41-4321": _fixture_g41_4321,
    "G41-3211": _fixture_g41_3211,
    "G41-2101": _fixture_g41_2101,
    "SO3-2101": _fixture_so3_2101,
}


def fixture_ids():
    return sorted(_FIXTURES)


def paper_fixture(fixture_id: str) -> Ideal:
    try:
        builder = _FIXTURES[fixture_id]
    except KeyError:
        raise UnknownFixtureError(fixture_id) from None
    return builder()


def assignment_from_matrix(ideal: Ideal, a_rows, extra=None):
    """Full variable assignment from a 4x4 (or n x n) scalar matrix for A.

    Inverse entries, the det slack and any extras are derived as needed.
    """
    from . import linalg

    mode = ideal.ring.mode
    a = [[Scalar.of(x, mode) for x in row] for row in a_rows]
    n = len(a)
    assignment = {}
    for i in range(n):
        for j in range(n):
            assignment[a_var(i + 1, j + 1)] = a[i][j]
    needs_b = any(v.startswith("b") for v in ideal.ring.vars)
    det = linalg.determinant(a)
    if needs_b or "t" in ideal.ring.vars:
        if det.is_zero():
            raise ValueError("matrix is singular; no assignment exists")
    if needs_b:
        binv = linalg.inverse(a)
        for i in range(n):
            for j in range(n):
                name = b_var(i + 1, j + 1)
                if name in ideal.ring.index:
                    assignment[name] = binv[i][j]
    if "t" in ideal.ring.index:
        assignment["t"] = det.inverse()
    for name in ideal.ring.vars:
        if name not in assignment:
            assignment[name] = Scalar.zero(mode)
    if extra:
        for k, v in extra.items():
            assignment[k] = Scalar.of(v, mode)
    return assignment
