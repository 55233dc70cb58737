"""Hilbert–Poincaré series as exact rational functions in ``t``.

Polynomials in ``t`` are tuples of integer coefficients, lowest degree
first, with trailing zeros stripped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .invariants import binom
from .wpoly import WPolynomial

IntPoly = Tuple[int, ...]


class IngredientExtractionUnavailable(NotImplementedError):
    """The gap-number ingredients cannot be constructed for this input."""


class FamilyTableUnavailable(NotImplementedError):
    """No transcribed three-variable family data is available."""


# polynomial helpers


def _trim(p: Sequence[int]) -> IntPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pneg(a: Sequence[int]) -> IntPoly:
    return tuple(-x for x in a)


def psub(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    return padd(a, pneg(b))


def pmul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def ppow(a: Sequence[int], k: int) -> IntPoly:
    out: IntPoly = (1,)
    for _ in range(k):
        out = pmul(out, a)
    return out


def monomial_t(k: int, c: int = 1) -> IntPoly:
    return _trim([0] * k + [c])


def peval(a: Sequence[int], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


ONE_MINUS_T: IntPoly = (1, -1)


def _div_one_minus_t(a: Sequence[int]) -> IntPoly:
    """Exact quotient ``a / (1 - t)``; requires ``a(1) = 0``."""
    # a = (1 - t) q  =>  q_i = a_0 + ... + a_i
    q, acc = [], 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    if acc + (a[-1] if a else 0) != 0:
        raise ArithmeticError("polynomial does not vanish at t = 1")
    return _trim(q)


@dataclass(frozen=True)
class RationalFunctionSeries:
    """``numerator / denominator`` with ``denominator(0) != 0``."""

    numerator: IntPoly
    denominator: IntPoly = (1,)

    def __post_init__(self):
        num = _trim(int(c) for c in self.numerator)
        den = _trim(int(c) for c in self.denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = reduce(gcd, num + den)
        if den[0] < 0 or (den[0] == 0 and next(c for c in den if c) < 0):
            g = -g
        object.__setattr__(self, "numerator", tuple(c // g for c in num))
        object.__setattr__(self, "denominator", tuple(c // g for c in den))

    @classmethod
    def poly(cls, coeffs: Sequence[int]) -> "RationalFunctionSeries":
        return cls(tuple(coeffs), (1,))

    @classmethod
    def const(cls, c: int) -> "RationalFunctionSeries":
        return cls((c,), (1,))

    # arithmetic

    def _lift(self, other):
        if isinstance(other, int):
            return RationalFunctionSeries.const(other)
        if isinstance(other, RationalFunctionSeries):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.denominator == other.denominator:
            return RationalFunctionSeries(padd(self.numerator, other.numerator), self.denominator)
        return RationalFunctionSeries(
            padd(pmul(self.numerator, other.denominator), pmul(other.numerator, self.denominator)),
            pmul(self.denominator, other.denominator))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionSeries(pneg(self.numerator), self.denominator)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunctionSeries(pmul(self.numerator, other.numerator),
                                      pmul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.numerator:
            raise ZeroDivisionError("division by the zero series")
        return RationalFunctionSeries(pmul(self.numerator, other.denominator),
                                      pmul(self.denominator, other.numerator))

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return pmul(self.numerator, other.denominator) == pmul(other.numerator, self.denominator)

    def __hash__(self):
        raise TypeError("RationalFunctionSeries is unhashable; equality is by cross multiplication")

    # evaluation

    def expand(self, K: int) -> List[int]:
        return expand(self, K)

    def reduced_at_one(self) -> "RationalFunctionSeries":
        """Cancel common ``(1 - t)`` factors."""
        num, den = self.numerator, self.denominator
        while num and peval(num, 1) == 0 and peval(den, 1) == 0:
            num, den = _div_one_minus_t(num), _div_one_minus_t(den)
        return RationalFunctionSeries(num, den)

    def value_at_one(self) -> Fraction:
        r = self.reduced_at_one()
        d = peval(r.denominator, 1)
        if d == 0:
            raise ZeroDivisionError("pole at t = 1")
        return peval(r.numerator, 1) / d

    def as_polynomial(self) -> Optional[IntPoly]:
        """The polynomial this function equals, or None if it is not an integer polynomial."""
        num = [Fraction(c) for c in self.numerator]
        den = self.denominator
        deg_d = len(den) - 1
        if len(num) - 1 < deg_d:
            return () if not num else None
        q = [Fraction(0)] * (len(num) - deg_d)
        for i in range(len(num) - 1, deg_d - 1, -1):
            c = num[i] / den[-1]
            q[i - deg_d] = c
            for j, dc in enumerate(den):
                num[i - deg_d + j] -= c * dc
        if any(num) or any(c.denominator != 1 for c in q):
            return None
        return _trim(int(c) for c in q)

    def format(self, var: str = "t") -> str:
        return f"({format_poly(self.numerator, var)}) / ({format_poly(self.denominator, var)})"

    def __str__(self):
        return self.format()


def format_poly(p: Sequence[int], var: str = "t") -> str:
    if not p:
        return "0"
    out = []
    for i, c in enumerate(p):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        out.append(("-" if c < 0 else "+", body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def expand(s: RationalFunctionSeries, K: int) -> List[int]:
    """Coefficients of ``t^0 .. t^K`` of the power series of ``s``."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    den = s.denominator
    if den[0] == 0:
        raise ZeroDivisionError("not expandable at t = 0")
    num = s.numerator
    out: List[Union[int, Fraction]] = []
    d0 = den[0]
    for k in range(K + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        if abs(d0) == 1:
            out.append(acc * d0)
        else:
            q = Fraction(acc, d0)
            if q.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {q} at t^{k}")
            out.append(int(q))
    return [int(c) for c in out]


def geometric(c: int = 1) -> RationalFunctionSeries:
    """``c / (1 - t)``."""
    return RationalFunctionSeries((c,), ONE_MINUS_T)


def t_over_one_minus_t_pow(shift: int, power: int) -> RationalFunctionSeries:
    """``t^shift / (1 - t)^power``."""
    return RationalFunctionSeries(monomial_t(shift), ppow(ONE_MINUS_T, power))


# assembly of the closed-form series


@dataclass(frozen=True)
class TheoremCIngredients:
    """Inputs of the gap-number form of the k-th Milnor and Tjurina series.

    ``gap_numbers`` are the ``L_i``; ``H_series[i]`` belongs to
    ``gap_numbers[i]``; ``Zinf`` is the series multiplied by ``t / (1 - t)``.
    """

    n: int
    mu0: int
    mij_list: Tuple[int, ...]
    gap_numbers: Tuple[int, ...]
    Zinf: RationalFunctionSeries
    H_series: Tuple[RationalFunctionSeries, ...] = ()

    def __post_init__(self):
        gaps = tuple(self.gap_numbers)
        if any(g <= 0 for g in gaps) or any(a >= b for a, b in zip(gaps, gaps[1:])):
            raise ValueError(f"gap numbers must be strictly increasing positive integers: {gaps}")
        if len(self.H_series) != len(gaps):
            raise ValueError("one H series is required per gap number")
        if len(self.mij_list) != self.n * (self.n - 1) // 2:
            raise ValueError("mij_list must hold one entry per pair i < j")
        object.__setattr__(self, "gap_numbers", gaps)
        object.__setattr__(self, "mij_list", tuple(self.mij_list))
        object.__setattr__(self, "H_series", tuple(self.H_series))


def _theorem_c(ing: TheoremCIngredients, tjurina: bool) -> RationalFunctionSeries:
    # common denominator (1 - t)^(n+1) * den(Zinf) * prod den(H_i)
    n = ing.n
    bracket = monomial_t(0, n)
    if tjurina:
        bracket = psub(bracket, monomial_t(1))
    for m in ing.mij_list:
        bracket = psub(bracket, monomial_t(m))
    zden = ing.Zinf.denominator
    hdens = [H.denominator for H in ing.H_series]
    all_h = reduce(pmul, hdens, (1,))
    base = ppow(ONE_MINUS_T, n)
    num = pmul(pmul(monomial_t(1), bracket), pmul(zden, all_h))
    body = padd(pmul(monomial_t(0, ing.mu0), zden), pmul(monomial_t(1), ing.Zinf.numerator))
    num = padd(num, pmul(body, pmul(base, all_h)))
    for i, (L, H) in enumerate(zip(ing.gap_numbers, ing.H_series)):
        others = reduce(pmul, hdens[:i] + hdens[i + 1:], (1,))
        term = pmul(psub(monomial_t(1), monomial_t(L + 1)), H.numerator)
        num = padd(num, pmul(term, pmul(base, pmul(zden, others))))
    return RationalFunctionSeries(num, pmul(ppow(ONE_MINUS_T, n + 1), pmul(zden, all_h)))


def assemble_theorem_c(ing: TheoremCIngredients) -> Tuple[RationalFunctionSeries, RationalFunctionSeries]:
    """``(M, A)``: the k-th Milnor and Tjurina generating functions."""
    return _theorem_c(ing, False), _theorem_c(ing, True)


def extract_ingredients(f: WPolynomial, ws) -> TheoremCIngredients:
    """Gap numbers and their series for ``f``.

    The constructions of the gap numbers, the limit series and the per-gap
    series are not available to this package, so every input is refused.
    Callers report the corresponding checks as pending.
    """
    raise IngredientExtractionUnavailable(
        "ingredient extraction unavailable: gap-number constructions are not transcribed")


@dataclass(frozen=True)
class FamilyData3:
    family_id: int
    representative: WPolynomial
    L_poly: RationalFunctionSeries

    def __post_init__(self):
        if not 1 <= self.family_id <= 7:
            raise ValueError("family_id must lie in 1..7")
        if self.representative.nvars != 3:
            raise ValueError("family representatives live in three variables")


# Transcribed three-variable family tables; empty until the source tables are available.
FAMILIES: Tuple[FamilyData3, ...] = ()


def families() -> Tuple[FamilyData3, ...]:
    if not FAMILIES:
        raise FamilyTableUnavailable("three-variable family tables are not transcribed")
    return FAMILIES


def assemble_theorem_d(fd: FamilyData3, mu0: int) -> Tuple[RationalFunctionSeries, RationalFunctionSeries]:
    """``M = mu0/(1-t) + (3t + t L)/(1-t)^4`` and ``A`` with an extra ``-t^2`` in the numerator."""
    # common denominator (1 - t)^4 * den(L)
    lnum, lden = fd.L_poly.numerator, fd.L_poly.denominator
    head = pmul(monomial_t(0, mu0), pmul(ppow(ONE_MINUS_T, 3), lden))
    tl = pmul(monomial_t(1), lnum)
    den = pmul(ppow(ONE_MINUS_T, 4), lden)
    M = RationalFunctionSeries(padd(head, padd(pmul((0, 3), lden), tl)), den)
    A = RationalFunctionSeries(padd(head, padd(pmul((0, 3, -1), lden), tl)), den)
    return M, A


def difference_series(n: int) -> RationalFunctionSeries:
    """``t^2 / (1 - t)^(n+1)``, the gap between the Milnor and Tjurina series."""
    return t_over_one_minus_t_pow(2, n + 1)


def difference_law(n: int, k: int) -> int:
    """Coefficient of ``t^k`` in :func:`difference_series`: ``binom(k - 2 + n, n)``."""
    return binom(k - 2 + n, n)


# verification


@dataclass
class VerificationReport:
    passed: bool
    K: int
    expected: List[int] = field(default_factory=list)
    actual: List[int] = field(default_factory=list)
    first_mismatch: Optional[int] = None

    @property
    def detail(self) -> str:
        if self.passed:
            return f"coefficients 0..{self.K} agree"
        i = self.first_mismatch
        return f"index {i}: series gives {self.actual[i]}, oracle gives {self.expected[i]}"


SeriesLike = Union[RationalFunctionSeries, Sequence[int]]
OracleLike = Union[Callable[[int], int], Sequence[int]]


def verify_against_oracle(series: SeriesLike, oracle_fn: OracleLike, K: int) -> VerificationReport:
    """Compare coefficients ``0..K`` of ``series`` with ``oracle_fn(k)``."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    if isinstance(series, RationalFunctionSeries):
        got = expand(series, K)
    else:
        got = list(series)[:K + 1]
        if len(got) < K + 1:
            raise ValueError(f"need {K + 1} values, got {len(got)}")
    if callable(oracle_fn):
        want = [oracle_fn(k) for k in range(K + 1)]
    else:
        want = list(oracle_fn)[:K + 1]
        if len(want) < K + 1:
            raise ValueError(f"need {K + 1} oracle values, got {len(want)}")
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return VerificationReport(False, K, want, got, i)
    return VerificationReport(True, K, want, got)
