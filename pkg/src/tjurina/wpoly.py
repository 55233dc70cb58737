"""Sparse exact polynomials with weighted gradings.

Monomials are plain tuples of nonnegative exponents.  Coefficients are
``Fraction`` values; the zero coefficient is never stored, so two
polynomials are equal exactly when their term maps are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]


class WeightError(ValueError):
    """Bad weight system input."""


class UnderdeterminedWeights(WeightError):
    """The homogeneity system has more than one independent solution."""


class DegenerateVariable(ValueError):
    """Some partial derivative vanishes identically."""


def wdeg(m: Sequence[int], ws: "WeightSystem") -> int:
    if len(m) != len(ws.weights):
        raise ValueError(f"arity mismatch: monomial has {len(m)} exponents, "
                         f"weight system has {len(ws.weights)} weights")
    return sum(e * w for e, w in zip(m, ws.weights))


def total_degree(m: Sequence[int]) -> int:
    return sum(m)


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights ``w_1..w_n`` and total weight ``W``.

    Construct through :meth:`normalize` to accept rationals; the direct
    constructor only validates.
    """

    weights: Tuple[int, ...]
    total: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "total", int(self.total))
        if not self.weights:
            raise WeightError("empty weight system")
        if any(w < 1 for w in self.weights):
            raise WeightError(f"weights must be positive: {self.weights}")
        if self.total < max(self.weights):
            raise WeightError(f"total weight {self.total} below max weight {max(self.weights)}")

    @classmethod
    def normalize(cls, weights: Iterable, total) -> "WeightSystem":
        """Clear denominators and divide out the common gcd."""
        vals = [Fraction(w) for w in weights] + [Fraction(total)]
        if any(v <= 0 for v in vals):
            raise WeightError("weights and total must be positive")
        den = reduce(lcm, (v.denominator for v in vals), 1)
        ints = [int(v * den) for v in vals]
        g = reduce(gcd, ints)
        ints = [v // g for v in ints]
        return cls(tuple(ints[:-1]), ints[-1])

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def wmax(self) -> int:
        return max(self.weights)

    @property
    def is_normalized(self) -> bool:
        return reduce(gcd, self.weights, self.total) == 1

    def milnor_orlik_product(self) -> Fraction:
        """``prod(W/w_i - 1)`` as an exact rational."""
        out = Fraction(1)
        for w in self.weights:
            out *= Fraction(self.total, w) - 1
        return out

    def __str__(self):
        return f"({','.join(map(str, self.weights))};{self.total})"


_NAMES3 = ("x", "y", "z")


def var_name(i: int, n: int) -> str:
    return _NAMES3[i] if n <= 3 else f"x{i + 1}"


class WPolynomial:
    """Immutable sparse polynomial in ``nvars`` variables over Q."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] = (), nvars: Optional[int] = None):
        items = dict(terms).items() if not isinstance(terms, dict) else terms.items()
        clean: Dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if nvars is None:
                nvars = len(m)
            elif len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            c = Fraction(c)
            if c:
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        if nvars is None or nvars < 1:
            raise ValueError("number of variables must be given for an empty polynomial")
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "WPolynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "WPolynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "WPolynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "WPolynomial":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "WPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    # accessors

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def order(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no order")
        return min(sum(m) for m in self._terms)

    def weighted_degrees(self, ws: WeightSystem) -> set:
        return {wdeg(m, ws) for m in self._terms}

    # arithmetic

    def _check(self, other: "WPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "WPolynomial":
        if isinstance(other, WPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return WPolynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return WPolynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return WPolynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return WPolynomial.zero(self.nvars)
            return WPolynomial._raw({m: c * other for m, c in self._terms.items()}, self.nvars)
        if not isinstance(other, WPolynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return WPolynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = WPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, beta: Sequence[int]) -> "WPolynomial":
        return WPolynomial._raw(
            {tuple(a + b for a, b in zip(m, beta)): c for m, c in self._terms.items()},
            self.nvars)

    def partial(self, i: int) -> "WPolynomial":
        """Derivative with respect to the variable with 0-based index ``i``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return WPolynomial._raw(out, self.nvars)

    def gradient(self) -> Tuple["WPolynomial", ...]:
        return tuple(self.partial(i) for i in range(self.nvars))

    # comparison, hashing, formatting

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WPolynomial.constant(other, self.nvars)
        if not isinstance(other, WPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __reduce__(self):
        return (WPolynomial, (self._terms, self.nvars))

    def sorted_terms(self, ws: Optional[WeightSystem] = None):
        """Terms in display order: descending (weighted) degree, then lex descending."""
        if ws is None:
            key = lambda mc: (sum(mc[0]), mc[0])
        else:
            key = lambda mc: (wdeg(mc[0], ws), mc[0])
        return sorted(self._terms.items(), key=key, reverse=True)

    def format(self, ws: Optional[WeightSystem] = None) -> str:
        if not self._terms:
            return "0"
        n = self.nvars
        parts = []
        for m, c in self.sorted_terms(ws):
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(var_name(i, n))
                elif e > 1:
                    factors.append(f"{var_name(i, n)}^{e}")
            mono = "*".join(factors)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"WPolynomial({self.format()!r}, nvars={self.nvars})"


def is_weighted_homogeneous(f: WPolynomial, ws: WeightSystem) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    return all(wdeg(m, ws) == ws.total for m in f.monomials())


def euler_check(f: WPolynomial, ws: WeightSystem) -> bool:
    """True iff sum w_i x_i f_i equals W f exactly."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.nvars
    lhs = WPolynomial.zero(n)
    for i, w in enumerate(ws.weights):
        lhs = lhs + WPolynomial.variable(i, n) * f.partial(i) * w
    return lhs == f * ws.total


def _nullspace(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Basis of the rational null space, via reduced row echelon form."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(mat, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def infer_weights(f: WPolynomial) -> Optional[WeightSystem]:
    """Solve ``sum w_i e_i = W`` over all exponent tuples of ``f``.

    Returns the normalized positive solution, or None when no positive
    solution exists.  Raises :class:`UnderdeterminedWeights` when the
    solution space has dimension above one.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.nvars
    rows = [list(m) + [-1] for m in sorted(f.monomials())]
    basis = _nullspace(rows, n + 1)
    if not basis:
        return None
    if len(basis) > 1:
        raise UnderdeterminedWeights(
            f"weights of {f} are underdetermined ({len(basis)}-dimensional solution space)")
    v = basis[0]
    if all(x < 0 for x in v):
        v = [-x for x in v]
    if not all(x > 0 for x in v):
        return None
    return WeightSystem.normalize(v[:-1], v[-1])


@dataclass(frozen=True)
class MultiplicityData:
    m0: int
    mi: Tuple[int, ...]
    mij: Tuple[Tuple[int, ...], ...]
    c: int
    wmax: int

    def mij_list(self) -> Tuple[int, ...]:
        """``m_{i,j}`` for ``i < j`` in row-major order."""
        n = len(self.mi)
        return tuple(self.mij[i][j] for i in range(n) for j in range(i + 1, n))


def multiplicities(f: WPolynomial, ws: WeightSystem) -> MultiplicityData:
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.nvars != ws.n:
        raise ValueError("arity mismatch between polynomial and weights")
    mi = []
    for i in range(f.nvars):
        fi = f.partial(i)
        if fi.is_zero():
            raise DegenerateVariable(f"degenerate variable: d f / d {var_name(i, f.nvars)} is zero")
        mi.append(fi.order())
    n = len(mi)
    mij = tuple(tuple(min(mi[i], mi[j]) for j in range(n)) for i in range(n))
    wmax = ws.wmax
    return MultiplicityData(
        m0=f.order(), mi=tuple(mi), mij=mij,
        c=sum(1 for w in ws.weights if w == wmax), wmax=wmax)
