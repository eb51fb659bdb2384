"""Sparse exact linear algebra on word-indexed vectors.

Vectors are dicts column -> scalar.  Columns are hashable and ordered by a
caller-supplied key; the pivot of a row is always its largest column, so a
fully reduced vector is a canonical representative of its coset.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .scalars import LaurentQ, RatFuncQ, is_zero

PRIME = (1 << 61) - 1


def _inv(c):
    if isinstance(c, RatFuncQ):
        return c.inverse()
    if isinstance(c, LaurentQ):
        return RatFuncQ.coerce(c).inverse()
    return Fraction(1) / c


def axpy(target: dict, coef, row: dict) -> None:
    """target += coef * row, in place, dropping zeros."""
    for col, v in row.items():
        s = target.get(col)
        s = coef * v if s is None else s + coef * v
        if is_zero(s):
            target.pop(col, None)
        else:
            target[col] = s


class Echelon:
    """Incrementally built row echelon form with pivot = largest column."""

    def __init__(self, key):
        self.key = key
        self.rows = {}  # pivot column -> row with pivot coefficient 1

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = dict(vec)
        while True:
            hits = [c for c in v if c in self.rows]
            if not hits:
                return v
            c = max(hits, key=self.key)
            axpy(v, -v[c], self.rows[c])

    def add(self, vec: dict) -> bool:
        """Insert vec; returns False when it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = max(v, key=self.key)
        inv = _inv(v[piv])
        self.rows[piv] = {c: x * inv for c, x in v.items()}
        return True

    def pivots(self):
        return set(self.rows)


# -- modular shadow -----------------------------------------------------------

def scalar_mod(c, x0: int, p: int = PRIME) -> int:
    if isinstance(c, (RatFuncQ, LaurentQ)):
        return c.eval_mod(x0, p)
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def vector_mod(vec: dict, x0: int, p: int = PRIME) -> dict:
    out = {}
    for col, c in vec.items():
        r = scalar_mod(c, x0, p)
        if r:
            out[col] = r
    return out


def modular_solve(rows, target, key, x0: int, p: int = PRIME):
    """Eliminate rows mod p, then express target in their span.

    Returns (independent_indices, support) where support is the set of
    independent row indices with a nonzero coefficient in the unique
    representation of target, or None when target is outside the span.
    """
    piv_rows = {}  # pivot -> (row, combo over independent row indices)
    independent = []
    for idx, row in enumerate(rows):
        v = dict(row)
        combo = {idx: 1}
        while True:
            hits = [c for c in v if c in piv_rows]
            if not hits:
                break
            c = max(hits, key=key)
            f = v[c]
            prow, pcombo = piv_rows[c]
            for cc, x in prow.items():
                s = (v.get(cc, 0) - f * x) % p
                if s:
                    v[cc] = s
                else:
                    v.pop(cc, None)
            for j, x in pcombo.items():
                s = (combo.get(j, 0) - f * x) % p
                if s:
                    combo[j] = s
                else:
                    combo.pop(j, None)
        if not v:
            continue
        piv = max(v, key=key)
        inv = pow(v[piv], -1, p)
        piv_rows[piv] = ({c: x * inv % p for c, x in v.items()},
                         {j: x * inv % p for j, x in combo.items()})
        independent.append(idx)
    v = dict(target)
    combo = {}
    while True:
        hits = [c for c in v if c in piv_rows]
        if not hits:
            break
        c = max(hits, key=key)
        f = v[c]
        prow, pcombo = piv_rows[c]
        for cc, x in prow.items():
            s = (v.get(cc, 0) - f * x) % p
            if s:
                v[cc] = s
            else:
                v.pop(cc, None)
        for j, x in pcombo.items():
            s = (combo.get(j, 0) + f * x) % p
            if s:
                combo[j] = s
            else:
                combo.pop(j, None)
    if v:
        return independent, None
    return independent, set(combo)


def sample_point(seed: int, p: int = PRIME) -> int:
    return random.Random(seed).randrange(3, p - 1)


def exact_solve(vectors, target: dict, key):
    """Express target as a combination of vectors over the exact field.

    Returns (rank, coefficients) where coefficients maps vector index to
    scalar, or is None when target lies outside the span.  When the vectors
    are dependent the returned combination is one of many.
    """
    piv_rows = {}
    rank = 0
    for idx, vec in enumerate(vectors):
        v = dict(vec)
        combo = {idx: 1}
        while True:
            hits = [c for c in v if c in piv_rows]
            if not hits:
                break
            c = max(hits, key=key)
            f = v[c]
            prow, pcombo = piv_rows[c]
            axpy(v, -f, prow)
            axpy(combo, -f, pcombo)
        if not v:
            continue
        rank += 1
        piv = max(v, key=key)
        inv = _inv(v[piv])
        piv_rows[piv] = ({c: x * inv for c, x in v.items()}, {j: x * inv for j, x in combo.items()})
    v = dict(target)
    combo: dict = {}
    while True:
        hits = [c for c in v if c in piv_rows]
        if not hits:
            break
        c = max(hits, key=key)
        f = v[c]
        prow, pcombo = piv_rows[c]
        axpy(v, -f, prow)
        axpy(combo, f, pcombo)
    if v:
        return rank, None
    return rank, combo
