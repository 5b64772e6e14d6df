"""Signature normalization, minimality ordering and enumeration.

A signature is compared up to component permutation and positive integer
rescaling: normalize by sorting non-increasing and dividing by the gcd,
then compare lexicographically.  The all-zero tuple sorts first.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .derivations import normalize_signature


def signature_sort_key(signature):
    return tuple(signature)


def signature_less(a, b) -> bool:
    """Strict minimality comparison on normalized signatures."""
    return tuple(normalize_signature(a)) < tuple(normalize_signature(b))


def enumerate_signatures(n: int, max_exp: int):
    """All normalized signature classes with entries in [0, max_exp], ascending.

    Non-increasing tuples whose nonzero entries have gcd 1, plus the zero
    tuple, sorted by the minimality order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if max_exp < 0:
        raise ValueError("max_exp must be nonnegative")
    out = set()
    for combo in combinations_with_replacement(range(max_exp, -1, -1), n):
        tup = tuple(sorted(combo, reverse=True))
        out.add(normalize_signature(tup))
    return sorted(out, key=signature_sort_key)


def parse_signature(text: str):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError("empty signature")
    return tuple(int(p) for p in parts)
