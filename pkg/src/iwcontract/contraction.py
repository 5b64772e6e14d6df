"""Contraction limits: the diagonal fast path and general parameter matrices.

The diagonal rule for W = diag(eps^a1, ..., eps^an): the limit exists iff
a_i + a_j >= a_k whenever c_ij^k is nonzero, and the surviving constants
are exactly those with a_i + a_j = a_k.  The general path conjugates the
tensor by an arbitrary invertible matrix of epsilon-rational functions and
takes the entrywise limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .epsilon import EpsMatrix, EpsRational, eps_matrix_inverse, limit_at_zero
from .errors import DimensionMismatch, NoLimitError
from .scalars import Scalar
from .tensor import StructureTensor, fingerprint, validate


@dataclass(frozen=True)
class NoLimit:
    """Structured divergence report: the offending transformed entry."""

    i: int
    j: int
    k: int
    detail: str = ""

    def __bool__(self):
        return False


@dataclass(frozen=True)
class ContractionResult:
    tensor: StructureTensor
    classification: str  # trivial | improper | proper-nontrivial
    matched: str | None = None

    def __bool__(self):
        return True


@dataclass(frozen=True)
class IWSpec:
    """Generalized IW contraction data U = A W P with constant A, P."""

    a: tuple
    signature: tuple
    p: tuple | None = None


def classify(source: StructureTensor, result: StructureTensor, match=True):
    """Trivial if abelian, improper if the fingerprint equals the source's."""
    from .catalog import match_catalog

    if result.is_zero():
        cls = "trivial"
    elif fingerprint(result) == fingerprint(source):
        cls = "improper"
    else:
        cls = "proper-nontrivial"
    matched = None
    if match:
        try:
            matched = match_catalog(result)
        except Exception:
            matched = None
    return cls, matched


def iw_limit_diagonal(t: StructureTensor, signature, match=True):
    """Diagonal generalized IW limit; NoLimit carries the offending triple."""
    n = t.n
    if len(signature) != n:
        raise DimensionMismatch(f"signature length {len(signature)} vs dim {n}")
    out = StructureTensor(n, t.mode)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = t.c[i][j][k]
                if v.is_zero():
                    continue
                s = signature[i] + signature[j] - signature[k]
                if s < 0:
                    return NoLimit(i + 1, j + 1, k + 1, detail=f"exponent {s} < 0")
                if s == 0:
                    out.c[i][j][k] = v
    cls, matched = classify(t, out, match)
    return ContractionResult(tensor=out, classification=cls, matched=matched)


def contract_with_matrix(t: StructureTensor, u: EpsMatrix, match=True):
    """Limit of the tensor conjugated by a matrix of epsilon functions."""
    n = t.n
    if u.n != n:
        raise DimensionMismatch(f"matrix dim {u.n} vs tensor dim {n}")
    uinv = eps_matrix_inverse(u)  # raises SingularMatrixError when det = 0
    out = StructureTensor(n, t.mode)
    zero = EpsRational.constant(0, t.mode)
    for ip in range(n):
        for jp in range(ip + 1, n):
            # transformed bracket of new basis vectors ip, jp as eps functions
            w = [zero] * n
            for i in range(n):
                ui = u.entries[i][ip]
                if ui.is_zero():
                    continue
                for j in range(n):
                    uj = u.entries[j][jp]
                    if uj.is_zero():
                        continue
                    row = t.c[i][j]
                    factor = ui * uj
                    for k in range(n):
                        if not row[k].is_zero():
                            w[k] = w[k] + factor * EpsRational.constant(row[k], t.mode)
            for kp in range(n):
                acc = zero
                for k in range(n):
                    if not w[k].is_zero():
                        acc = acc + uinv.entries[kp][k] * w[k]
                try:
                    value = limit_at_zero(acc)
                except NoLimitError:
                    return NoLimit(ip + 1, jp + 1, kp + 1, detail="entry diverges")
                out.c[ip][jp][kp] = value
                out.c[jp][ip][kp] = -value
    bad = validate(out)
    if bad:
        raise AssertionError(f"contraction limit failed Jacobi/antisymmetry: {bad[:3]}")
    cls, matched = classify(t, out, match)
    return ContractionResult(tensor=out, classification=cls, matched=matched)


def build_iw_matrix(a, signature, p=None, mode=None) -> EpsMatrix:
    """U = A diag(eps^signature) P with constant invertible A and P."""
    mode = mode or a[0][0].mode
    ua = EpsMatrix.from_scalar_matrix(a)
    w = EpsMatrix.diagonal_powers(list(signature), mode)
    u = ua * w
    if p is not None:
        u = u * EpsMatrix.from_scalar_matrix(p)
    return u


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    reason: str
    expected: str
    matched: str | None
    signature: tuple
    signature_normalized: tuple
    classification: str | None
    tensor: StructureTensor | None
    no_limit: NoLimit | None = None
    fingerprints: dict = field(default_factory=dict)

    def to_json(self):
        data = {
            "schema_version": "1",
            "ok": self.ok,
            "reason": self.reason,
            "expected": self.expected,
            "matched": self.matched,
            "signature": list(self.signature),
            "signature_normalized": list(self.signature_normalized),
            "classification": self.classification,
        }
        if self.tensor is not None:
            data["tensor"] = self.tensor.to_json()
        if self.no_limit is not None:
            data["no_limit"] = {
                "i": self.no_limit.i,
                "j": self.no_limit.j,
                "k": self.no_limit.k,
                "detail": self.no_limit.detail,
            }
        if self.fingerprints:
            data["fingerprints"] = {k: v.to_json() for k, v in self.fingerprints.items()}
        return data


def verify_iw(t: StructureTensor, spec: IWSpec, expected: str) -> VerificationReport:
    """Build U = A W P, contract, and compare against the expected catalog name."""
    from .catalog import catalog_fingerprint, catalog_get
    from .derivations import normalize_signature

    a = [[Scalar.of(x, t.mode) for x in row] for row in spec.a]
    det = linalg.determinant(a)
    normalized = normalize_signature(spec.signature)
    if det.is_zero():
        return VerificationReport(
            ok=False, reason="matrix A is singular", expected=expected, matched=None,
            signature=tuple(spec.signature), signature_normalized=normalized,
            classification=None, tensor=None,
        )
    p = None
    if spec.p is not None:
        p = [[Scalar.of(x, t.mode) for x in row] for row in spec.p]
        if linalg.determinant(p).is_zero():
            return VerificationReport(
                ok=False, reason="matrix P is singular", expected=expected, matched=None,
                signature=tuple(spec.signature), signature_normalized=normalized,
                classification=None, tensor=None,
            )
    u = build_iw_matrix(a, spec.signature, p, t.mode)
    outcome = contract_with_matrix(t, u)
    if isinstance(outcome, NoLimit):
        return VerificationReport(
            ok=False, reason="limit does not exist", expected=expected, matched=None,
            signature=tuple(spec.signature), signature_normalized=normalized,
            classification=None, tensor=None, no_limit=outcome,
        )
    target = catalog_get(expected)
    exact = outcome.tensor == target.tensor
    matched = outcome.matched
    ok = exact or matched == target.name
    if ok:
        reason = "exact catalog constants" if exact else "fingerprint match"
    else:
        reason = "limit exists but does not match the expected algebra"
    fps = {}
    if not ok:
        fps = {"result": fingerprint(outcome.tensor), "expected": catalog_fingerprint(expected)}
    return VerificationReport(
        ok=ok, reason=reason, expected=expected, matched=matched,
        signature=tuple(spec.signature), signature_normalized=normalized,
        classification=outcome.classification, tensor=outcome.tensor, fingerprints=fps,
    )
