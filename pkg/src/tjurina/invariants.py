"""Closed-form invariants of weighted homogeneous singularities.

All formulas here depend on the weights and multiplicities only, so they
are valid for ``k <= m0``; past the multiplicity the numbers are no longer
determined by the weights and must come from the oracle or a series.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import gradedlin
from .wpoly import MultiplicityData, WeightError, WeightSystem, WPolynomial, multiplicities


class FormulaRangeError(ValueError):
    """Formula requested outside its validity range."""


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes for ``a < b`` and for negative ``a``."""
    if b < 0:
        raise ValueError("lower index must be nonnegative")
    if a < 0 or a < b:
        return 0
    return comb(a, b)


def milnor_orlik(ws: WeightSystem) -> int:
    """``prod(W / w_i - 1)``; raises :class:`WeightError` unless a nonnegative integer."""
    if any(w >= ws.total for w in ws.weights):
        raise WeightError(f"inadmissible weight system {ws}: need W > w_i for every i")
    mu = ws.milnor_orlik_product()
    if mu.denominator != 1 or mu < 0:
        raise WeightError(f"inadmissible weight system {ws}: Milnor number {mu} is not an integer")
    return int(mu)


@dataclass(frozen=True)
class ClosedFormContext:
    n: int
    ws: WeightSystem
    mult: MultiplicityData
    mu0: int

    @classmethod
    def from_polynomial(cls, f: WPolynomial, ws: WeightSystem) -> "ClosedFormContext":
        return cls(n=f.nvars, ws=ws, mult=multiplicities(f, ws), mu0=milnor_orlik(ws))

    @property
    def m0(self) -> int:
        return self.mult.m0


def _range_check(ctx: ClosedFormContext, k: int):
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > ctx.m0:
        raise FormulaRangeError(f"formula out of validity range: k = {k} > m0 = {ctx.m0}")


def theorem_b_mu(ctx: ClosedFormContext, k: int) -> int:
    """k-th Milnor number for ``0 <= k <= m0``."""
    _range_check(ctx, k)
    n, c = ctx.n, ctx.mult.c
    value = ctx.mu0 + n * binom(k - 1 + n, n)
    if k == ctx.m0:
        value -= c * (2 * n - c - 1) // 2
    return value


def theorem_b_tau(ctx: ClosedFormContext, k: int) -> int:
    """k-th Tjurina number for ``0 <= k <= m0``."""
    return theorem_b_mu(ctx, k) - binom(k - 2 + ctx.n, ctx.n)


def jet_dim_closed(n: int, m0: int, k: int) -> int:
    """``dim O / (f, m^k)`` for ``f`` of order ``m0`` in ``n`` variables."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return binom(n + k - 1, n) - binom(n + k - 1 - m0, n)


def tangent_dim(f: WPolynomial, ws: WeightSystem, k: int, bound: Optional[int] = None, **kw) -> int:
    """Tangent-space dimension of k-pointed deformations: ``tau_k - dim O/(f, m^k)``."""
    tau = gradedlin.tau_oracle(f, ws, k, bound, **kw)
    jet = gradedlin.jet_oracle(f, ws, k, bound, **kw)
    return tau - jet
