"""Exact rank of sparse rational matrices.

Rows are mappings ``column -> coefficient``.  Each row is scaled to a
primitive integer vector and reduced against an echelon basis by
fraction-free cross multiplication, dividing out the content after every
step to keep entries small.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Optional

Row = Dict[int, int]


def primitive_row(row: Mapping[int, object]) -> Row:
    """Integer row with positive leading entry and unit content."""
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = reduce(lcm, (v.denominator for _, v in items), 1)
    ints = {c: int(v * den) for c, v in items}
    g = reduce(gcd, ints.values())
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def _eliminate(r: Row, p: Row, col: int) -> Row:
    a, b = r[col], p[col]
    g = gcd(a, b)
    sa, sb = b // g, a // g
    out = {c: v * sa for c, v in r.items()}
    for c, v in p.items():
        s = out.get(c, 0) - v * sb
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    if out:
        g = reduce(gcd, out.values())
        if g != 1:
            out = {c: v // g for c, v in out.items()}
    return out


class EchelonBasis:
    """Incrementally maintained row echelon form over the integers."""

    def __init__(self):
        self.pivots: Dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> Row:
        r = primitive_row(row)
        while r:
            col = min(r)
            p = self.pivots.get(col)
            if p is None:
                return r
            r = _eliminate(r, p, col)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Mapping[int, object]], limit: Optional[int] = None) -> int:
    """Exact rank over Q.  Stops early once ``limit`` (e.g. the column count) is reached."""
    eb = EchelonBasis()
    if limit == 0:
        return 0
    for row in rows:
        if eb.add(row) and limit is not None and eb.rank >= limit:
            break
    return eb.rank


def rank_mod_p(rows: Iterable[Mapping[int, object]], p: int = 2_147_483_647) -> int:
    """Rank over GF(p) of the primitive integer rows; a lower bound for the rational rank."""
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in primitive_row(row).items() if v % p}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in r.items()}
                break
            f = r[col]
            for c, v in piv.items():
                s = (r.get(c, 0) - f * v) % p
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
    return len(pivots)
