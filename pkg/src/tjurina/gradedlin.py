"""Brute-force dimensions of graded quotient algebras.

Every ideal handled here is spanned, degree by degree, by products
``x^beta * g`` where ``g`` is a weighted homogeneous generator and the
cofactor satisfies ``|beta| >= min_cofactor_degree``.  The quotient
dimension is the sum over weighted degrees of ``N_d - rank_d``.
"""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .linalg import rank
from .wpoly import Monomial, WeightSystem, WPolynomial, is_weighted_homogeneous, wdeg


class DimensionNotFinite(ArithmeticError):
    """The quotient still has deficient graded pieces at the hard bound."""


@dataclass(frozen=True)
class ConstrainedGenerator:
    g: WPolynomial
    min_cofactor_degree: int = 0

    def __post_init__(self):
        if self.min_cofactor_degree < 0:
            raise ValueError("min_cofactor_degree must be nonnegative")
        if self.g.is_zero():
            raise ValueError("zero generator")


@dataclass(frozen=True)
class GradedGeneratorSet:
    ws: WeightSystem
    gens: Tuple[ConstrainedGenerator, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        degs = []
        for cg in self.gens:
            if cg.g.nvars != self.ws.n:
                raise ValueError("generator arity differs from the weight system")
            ds = cg.g.weighted_degrees(self.ws)
            if len(ds) != 1:
                raise ValueError(f"generator {cg.g} is not weighted homogeneous")
            degs.append(ds.pop())
        object.__setattr__(self, "_degrees", tuple(degs))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees


@dataclass
class DegreeProfile:
    per_degree: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    total: int = 0

    def hilbert_function(self) -> List[Tuple[int, int]]:
        """Nonzero ``(d, N_d - r_d)`` pairs in increasing degree."""
        return [(d, n - r) for d, (n, r) in sorted(self.per_degree.items()) if n > r]


@lru_cache(maxsize=4096)
def _monomials(weights: Tuple[int, ...], d: int) -> Tuple[Monomial, ...]:
    n = len(weights)
    out: List[Monomial] = []

    def rec(i, rest, prefix):
        if i == n - 1:
            if rest % weights[i] == 0:
                out.append(prefix + (rest // weights[i],))
            return
        for e in range(rest // weights[i], -1, -1):
            rec(i + 1, rest - e * weights[i], prefix + (e,))

    if d >= 0:
        rec(0, d, ())
    return tuple(out)


def monomials_of_wdegree(ws: WeightSystem, d: int) -> Tuple[Monomial, ...]:
    """All monomials of weighted degree ``d``, lexicographically descending (x > y > z)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _monomials(ws.weights, d)


def _piece_rows(gs: GradedGeneratorSet, d: int, index: Dict[Monomial, int]):
    for cg, e in zip(gs.gens, gs.degrees):
        if e > d:
            continue
        terms = list(cg.g.items())
        for beta in _monomials(gs.ws.weights, d - e):
            if sum(beta) < cg.min_cofactor_degree:
                continue
            row = {}
            for m, c in terms:
                row[index[tuple(a + b for a, b in zip(m, beta))]] = c
            yield row


def piece_dimension(gs: GradedGeneratorSet, d: int) -> Tuple[int, int]:
    """``(N_d, r_d)``: ambient dimension and ideal rank in weighted degree ``d``."""
    basis = monomials_of_wdegree(gs.ws, d)
    nd = len(basis)
    if nd == 0:
        return 0, 0
    index = {m: i for i, m in enumerate(basis)}
    return nd, rank(_piece_rows(gs, d, index), limit=nd)


def _piece_batch(gs: GradedGeneratorSet, degrees: Sequence[int]) -> List[Tuple[int, int]]:
    return [piece_dimension(gs, d) for d in degrees]


def _pieces(gs: GradedGeneratorSet, stop: int, executor: Optional[Executor], chunk: int):
    """Yield ``(d, N_d, r_d)`` for d = 0..stop in order; batches run on ``executor`` if given."""
    if executor is None:
        for d in range(stop + 1):
            yield (d,) + piece_dimension(gs, d)
        return
    workers = getattr(executor, "_max_workers", 2) or 2
    d = 0
    while d <= stop:
        batches = []
        for _ in range(workers):
            if d > stop:
                break
            degs = list(range(d, min(d + chunk, stop + 1)))
            batches.append((degs, executor.submit(_piece_batch, gs, degs)))
            d += len(degs)
        for degs, fut in batches:
            for dd, (nd, rd) in zip(degs, fut.result()):
                yield dd, nd, rd


def quotient_dimension(gs: GradedGeneratorSet, hard_bound: int, *, early_exit: bool = True,
                       executor: Optional[Executor] = None) -> DegreeProfile:
    """Dimension of ``O / I`` for the ideal spanned by ``gs``.

    ``hard_bound`` is a weighted degree from which every piece is known to
    lie in the ideal when the quotient is finite.  The scan stops once
    ``wmax`` consecutive pieces are full (every later piece is then full as
    well).  The pieces ``hard_bound .. hard_bound + wmax - 1`` are always
    inspected when the scan gets that far, so a quotient that is not finite
    raises :class:`DimensionNotFinite` instead of returning a truncation.
    """
    if hard_bound < 0:
        raise ValueError("hard_bound must be nonnegative")
    wmax = gs.ws.wmax
    stop = hard_bound + wmax - 1
    prof = DegreeProfile()
    run = 0
    window_done = False
    deficient_tail = []
    chunk = max(wmax, 8)
    for d, nd, rd in _pieces(gs, stop, executor, chunk):
        prof.per_degree[d] = (nd, rd)
        prof.total += nd - rd
        if nd == rd:
            run += 1
        else:
            run = 0
            if d >= hard_bound:
                deficient_tail.append(d)
        if run >= wmax and early_exit and not window_done:
            window_done = True
            break
    if deficient_tail or (run < wmax and not window_done):
        bad = deficient_tail[0] if deficient_tail else stop
        raise DimensionNotFinite(
            f"dimension not finite within bound {hard_bound} (deficient piece at degree {bad})")
    return prof


def default_bound(ws: WeightSystem, k: int) -> int:
    """``(mu0 + k) * wmax``: m^(mu0 + k) lies in m^k J(f) when dim O/J(f) = mu0."""
    mu0 = ws.milnor_orlik_product()
    return (max(0, ceil(mu0)) + k) * ws.wmax


def _check_input(f: WPolynomial, ws: WeightSystem, k: int):
    if k < 0:
        raise ValueError("k must be nonnegative")
    if f.nvars != ws.n:
        raise ValueError("arity mismatch between polynomial and weights")
    if not is_weighted_homogeneous(f, ws):
        raise ValueError(f"{f} is not weighted homogeneous of type {ws}")


def tjurina_ideal(f: WPolynomial, ws: WeightSystem, k: int) -> GradedGeneratorSet:
    """Generators of ``(f, m^k J(f))``."""
    gens = [ConstrainedGenerator(f, 0)]
    gens += [ConstrainedGenerator(fi, k) for fi in f.gradient() if not fi.is_zero()]
    return GradedGeneratorSet(ws, gens)


def milnor_ideal(f: WPolynomial, ws: WeightSystem, k: int) -> GradedGeneratorSet:
    """Generators of ``m^k J(f)``."""
    return GradedGeneratorSet(ws, [ConstrainedGenerator(fi, k) for fi in f.gradient() if not fi.is_zero()])


def jet_ideal(f: WPolynomial, ws: WeightSystem, k: int) -> GradedGeneratorSet:
    """Generators of ``(f, m^k)``; for k = 0 the unit ideal."""
    n = f.nvars
    if k == 0:
        return GradedGeneratorSet(ws, [ConstrainedGenerator(WPolynomial.constant(1, n), 0)])
    gens = [ConstrainedGenerator(f, 0)]
    gens += [ConstrainedGenerator(WPolynomial.variable(i, n), k - 1) for i in range(n)]
    return GradedGeneratorSet(ws, gens)


def _oracle(build: Callable, f, ws, k, bound, early_exit, executor) -> int:
    _check_input(f, ws, k)
    if bound is None:
        bound = default_bound(ws, k)
    return quotient_dimension(build(f, ws, k), bound, early_exit=early_exit, executor=executor).total


def tau_oracle(f: WPolynomial, ws: WeightSystem, k: int, bound: Optional[int] = None, *,
               early_exit: bool = True, executor: Optional[Executor] = None) -> int:
    """``dim O / (f, m^k J(f))``."""
    return _oracle(tjurina_ideal, f, ws, k, bound, early_exit, executor)


def mu_oracle(f: WPolynomial, ws: WeightSystem, k: int, bound: Optional[int] = None, *,
              early_exit: bool = True, executor: Optional[Executor] = None) -> int:
    """``dim O / m^k J(f)``."""
    return _oracle(milnor_ideal, f, ws, k, bound, early_exit, executor)


def jet_oracle(f: WPolynomial, ws: WeightSystem, k: int, bound: Optional[int] = None, *,
               early_exit: bool = True, executor: Optional[Executor] = None) -> int:
    """``dim O / (f, m^k)``."""
    return _oracle(jet_ideal, f, ws, k, bound, early_exit, executor)


def milnor_hilbert_profile(f: WPolynomial, ws: WeightSystem, bound: Optional[int] = None, *,
                           executor: Optional[Executor] = None) -> List[Tuple[int, int]]:
    """Weighted-degree Hilbert function of the Milnor algebra ``O / J(f)`` (nonzero entries)."""
    _check_input(f, ws, 0)
    if bound is None:
        bound = default_bound(ws, 0)
    return quotient_dimension(milnor_ideal(f, ws, 0), bound, executor=executor).hilbert_function()
