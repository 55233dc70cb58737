"""Graded Koszul complex on the partial derivatives.

``F_p`` is free on the exterior generators ``e_S`` (``S`` a ``p``-subset of
the variable indices, in ``itertools.combinations`` order); ``e_S`` sits in
weighted degree ``sum(W - w_i for i in S)`` so that the differential

    d(e_S) = sum_j (-1)^j f_{S_j} e_{S without S_j}

preserves degree.  Homology is computed piecewise from exact ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .gradedlin import default_bound, monomials_of_wdegree
from .linalg import rank
from .series import RationalFunctionSeries, monomial_t, pmul, psub
from .wpoly import DegenerateVariable, Monomial, WeightSystem, WPolynomial, var_name

Chain = Dict[Tuple[int, ...], WPolynomial]


@dataclass(frozen=True)
class GradedFreeModule:
    generator_shifts: Tuple[int, ...]

    def piece_dimension(self, ws: WeightSystem, d: int) -> int:
        return sum(len(monomials_of_wdegree(ws, d - s)) for s in self.generator_shifts if d >= s)


@dataclass(frozen=True)
class KoszulComplex:
    n: int
    ws: WeightSystem
    partials: Tuple[WPolynomial, ...]
    labels: Tuple[Tuple[Tuple[int, ...], ...], ...]
    modules: Tuple[GradedFreeModule, ...]

    def basis(self, p: int, d: int) -> List[Tuple[Tuple[int, ...], Monomial]]:
        """Basis of ``(F_p)_d`` as ``(S, monomial)`` pairs."""
        out = []
        for S, s in zip(self.labels[p], self.modules[p].generator_shifts):
            if d >= s:
                out.extend((S, m) for m in monomials_of_wdegree(self.ws, d - s))
        return out

    def boundary(self, chain: Chain) -> Chain:
        """Apply the differential to ``{S: coefficient polynomial}``."""
        out: Chain = {}
        for S, c in chain.items():
            for j, i in enumerate(S):
                T = S[:j] + S[j + 1:]
                term = c * self.partials[i]
                if j % 2:
                    term = -term
                out[T] = out[T] + term if T in out else term
        return {T: c for T, c in out.items() if not c.is_zero()}

    def boundary_rows(self, p: int, d: int) -> List[Dict[int, object]]:
        """Rows of the degree-``d`` matrix of ``d_p: F_p -> F_{p-1}``."""
        if p <= 0 or p > self.n:
            return []
        target = {b: i for i, b in enumerate(self.basis(p - 1, d))}
        rows = []
        for S, m in self.basis(p, d):
            row: Dict[int, object] = {}
            for j, i in enumerate(S):
                T = S[:j] + S[j + 1:]
                sign = -1 if j % 2 else 1
                for mono, c in self.partials[i].items():
                    key = (T, tuple(a + b for a, b in zip(mono, m)))
                    col = target[key]
                    row[col] = row.get(col, 0) + sign * c
            rows.append({c: v for c, v in row.items() if v})
        return rows

    def boundary_rank(self, p: int, d: int) -> int:
        if p <= 0 or p > self.n:
            return 0
        return rank(self.boundary_rows(p, d))

    def is_complex_in_degree(self, d: int) -> bool:
        """``d o d = 0`` on every basis element of degree ``d``."""
        for p in range(2, self.n + 1):
            for S, m in self.basis(p, d):
                if self.boundary(self.boundary({S: WPolynomial.monomial(m)})):
                    return False
        return True


def build_koszul(f: WPolynomial, ws: WeightSystem) -> KoszulComplex:
    n = f.nvars
    if n != ws.n:
        raise ValueError("arity mismatch between polynomial and weights")
    partials = f.gradient()
    for i, fi in enumerate(partials):
        if fi.is_zero():
            raise DegenerateVariable(f"degenerate variable: d f / d {var_name(i, n)} is zero")
    labels = tuple(tuple(combinations(range(n), p)) for p in range(n + 1))
    shifts = tuple(
        GradedFreeModule(tuple(sum(ws.total - ws.weights[i] for i in S) for S in labels[p]))
        for p in range(n + 1))
    return KoszulComplex(n=n, ws=ws, partials=partials, labels=labels, modules=shifts)


def homology_rank(kc: KoszulComplex, p: int, d: int) -> int:
    """``dim ker(d_p)_d - dim im(d_{p+1})_d``."""
    if not 0 <= p <= kc.n:
        raise ValueError(f"homological index {p} outside 0..{kc.n}")
    dim = kc.modules[p].piece_dimension(kc.ws, d)
    return dim - kc.boundary_rank(p, d) - kc.boundary_rank(p + 1, d)


def homology_table(kc: KoszulComplex, bound: Optional[int] = None) -> List[Tuple[int, List[int], List[int]]]:
    """Rows ``(d, [dim F_p]_p, [H_p]_p)`` for ``d = 0..bound``."""
    if bound is None:
        bound = default_bound(kc.ws, 0)
    out = []
    for d in range(bound + 1):
        ranks = [kc.boundary_rank(p, d) for p in range(kc.n + 2)]
        dims = [kc.modules[p].piece_dimension(kc.ws, d) for p in range(kc.n + 1)]
        hom = [dims[p] - ranks[p] - ranks[p + 1] for p in range(kc.n + 1)]
        out.append((d, dims, hom))
    return out


def hilbert_from_euler(f: WPolynomial, ws: WeightSystem) -> RationalFunctionSeries:
    """``prod (1 - t^(W - w_i)) / (1 - t^(w_i))``, the Hilbert series of the Milnor algebra."""
    if f.nvars != ws.n:
        raise ValueError("arity mismatch between polynomial and weights")
    num: Tuple[int, ...] = (1,)
    den: Tuple[int, ...] = (1,)
    for w in ws.weights:
        num = pmul(num, psub((1,), monomial_t(ws.total - w)))
        den = pmul(den, psub((1,), monomial_t(w)))
    return RationalFunctionSeries(num, den)
