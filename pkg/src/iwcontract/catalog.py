"""Named low-dimensional Lie algebras and fingerprint-based recognition.

Rational-mode entries carry the real four-dimensional algebras plus the
three-dimensional ones needed for the desk-scale checks; gaussian-mode
entries are their complexifications.  Isomorphic complexifications are
merged under one name with aliases (the complexified "A4.10" is the same
complex algebra as "2g2.1").
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AmbiguousMatchError, UnknownAlgebraError
from .scalars import GAUSSIAN, RATIONAL
from .tensor import Fingerprint, StructureTensor, fingerprint, validate


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    tensor: StructureTensor
    note: str = ""
    aliases: tuple = field(default=())


def _entry(name, n, mode, brackets, note="", aliases=()):
    return CatalogEntry(
        name=name,
        tensor=StructureTensor.from_brackets(n, brackets, mode),
        note=note,
        aliases=tuple(aliases),
    )


_SO3 = {(1, 2, 3): 1, (2, 3, 1): 1, (1, 3, 2): -1}
_SL2 = {(1, 2, 2): 2, (1, 3, 3): -2, (2, 3, 1): 1}

_ENTRIES = [
    # real (rational-mode) four-dimensional algebras
    _entry("2A2.1", 4, RATIONAL, {(1, 2, 1): 1, (3, 4, 3): 1},
           note="[e1,e2]=e1, [e3,e4]=e3"),
    _entry("A1+A3.2", 4, RATIONAL, {(2, 4, 2): 1, (3, 4, 2): 1, (3, 4, 3): 1},
           note="[e2,e4]=e2, [e3,e4]=e2+e3"),
    _entry("A4.1", 4, RATIONAL, {(2, 4, 1): 1, (3, 4, 2): 1},
           note="[e2,e4]=e1, [e3,e4]=e2"),
    _entry("A4.10", 4, RATIONAL, {(1, 3, 1): 1, (2, 3, 2): 1, (1, 4, 2): -1, (2, 4, 1): 1},
           note="[e1,e3]=e1, [e2,e3]=e2, [e1,e4]=-e2, [e2,e4]=e1"),
    _entry("so3+A1", 4, RATIONAL, _SO3,
           note="so(3) in the cyclic basis [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; e4 central"),
    _entry("heisenberg+A1", 4, RATIONAL, {(1, 2, 3): 1},
           note="[e1,e2]=e3; e4 central"),
    _entry("abelian4", 4, RATIONAL, {}, note="zero bracket", aliases=("4A1",)),
    # real three-dimensional algebras
    _entry("so3", 3, RATIONAL, _SO3, note="cyclic basis convention"),
    _entry("sl2", 3, RATIONAL, _SL2, note="basis (h,e,f): [h,e]=2e, [h,f]=-2f, [e,f]=h"),
    _entry("heisenberg3", 3, RATIONAL, {(1, 2, 3): 1}, note="[e1,e2]=e3", aliases=("A3.1",)),
    _entry("abelian3", 3, RATIONAL, {}, note="zero bracket", aliases=("3A1",)),
    # complex (gaussian-mode) counterparts
    _entry("2g2.1", 4, GAUSSIAN, {(1, 2, 1): 1, (3, 4, 3): 1},
           note="complexification of both 2A2.1 and A4.10",
           aliases=("g4.10", "2A2.1c", "A4.10c")),
    _entry("g1+g3.2", 4, GAUSSIAN, {(2, 4, 2): 1, (3, 4, 2): 1, (3, 4, 3): 1},
           note="complexification of A1+A3.2", aliases=("A1+A3.2c",)),
    _entry("g4.1", 4, GAUSSIAN, {(2, 4, 1): 1, (3, 4, 2): 1},
           note="complexification of A4.1", aliases=("A4.1c",)),
    _entry("sl2+g1", 4, GAUSSIAN, _SL2,
           note="complexification of so3+A1 (and of sl2+A1)", aliases=("so3+A1c", "so3+g1")),
    _entry("heisenberg+g1", 4, GAUSSIAN, {(1, 2, 3): 1},
           note="complexified Heisenberg plus a central direction", aliases=("heisenberg+A1c",)),
    _entry("4g1", 4, GAUSSIAN, {}, note="zero bracket", aliases=("abelian4c",)),
]

_BY_NAME = {}
for _e in _ENTRIES:
    _BY_NAME[_e.name] = _e
    for _a in _e.aliases:
        _BY_NAME[_a] = _e


def catalog_names(mode=None):
    return [e.name for e in _ENTRIES if mode is None or e.tensor.mode == mode]


def catalog_get(name) -> CatalogEntry:
    entry = _BY_NAME.get(name)
    if entry is None:
        raise UnknownAlgebraError(name)
    return entry


def catalog_tensor(name) -> StructureTensor:
    return catalog_get(name).tensor


_FP_CACHE = {}


def catalog_fingerprint(name) -> Fingerprint:
    entry = catalog_get(name)
    if entry.name not in _FP_CACHE:
        _FP_CACHE[entry.name] = fingerprint(entry.tensor)
    return _FP_CACHE[entry.name]


def match_catalog(t: StructureTensor, candidates=None):
    """Name of the unique candidate with the same dimension and fingerprint.

    Returns None when nothing matches.  Candidates default to the whole
    catalog for the tensor's field mode.  Fingerprint-equality is exact
    isomorphism detection only within the shipped catalog, where the
    build-time distinctness test guarantees separation.
    """
    if validate(t):
        raise ValueError("tensor is not a Lie algebra")
    if candidates is None:
        candidates = catalog_names(t.mode)
    fp = fingerprint(t)
    hits = []
    for name in candidates:
        entry = catalog_get(name)
        if entry.tensor.n != t.n or entry.tensor.mode != t.mode:
            continue
        if catalog_fingerprint(name) == fp and entry.name not in hits:
            hits.append(entry.name)
    if len(hits) > 1:
        raise AmbiguousMatchError(f"fingerprint shared by {hits}")
    return hits[0] if hits else None
