"""Text input: polynomials and weight lists."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .wpoly import WeightSystem, WPolynomial

_ALIASES = {"x": 0, "y": 1, "z": 2}
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^−]))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        val = m.group(kind)
        start = m.start(kind)
        if kind == "op" and val == "−":
            val = "-"
        toks.append((kind, val, start))
        pos = m.end()
    return toks


def _var_index(name: str, offset: int) -> int:
    if name in _ALIASES:
        return _ALIASES[name]
    m = re.fullmatch(r"x([1-9]\d*)", name)
    if not m:
        raise ParseError(f"unknown identifier {name!r}", offset)
    return int(m.group(1)) - 1


def parse_polynomial(text: str, nvars: Optional[int] = None) -> WPolynomial:
    """Parse ``"2*x*y^2 - z^3"`` style input.

    Variables are ``x1..xn`` with ``x, y, z`` aliasing the first three.  The
    number of variables is the largest index used unless ``nvars`` is given.
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty input", 0)
    pos = 0
    terms = []  # (coeff, {var: exp})

    def peek():
        return toks[pos] if pos < len(toks) else None

    while pos < len(toks):
        sign = 1
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            pos += 1
        elif terms:
            raise ParseError("expected '+' or '-'", tok[2])
        tok = peek()
        if tok is None:
            raise ParseError("dangling sign", len(text))
        coeff = Fraction(sign)
        factors = {}
        saw_factor = False
        if tok[0] == "num":
            c = Fraction(tok[1])
            coeff *= c
            pos += 1
            saw_factor = True
            tok = peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                pos += 1
                tok = peek()
                if tok is None or tok[0] != "id":
                    raise ParseError("expected variable after '*'", tok[2] if tok else len(text))
        while tok is not None and tok[0] == "id":
            idx = _var_index(tok[1], tok[2])
            pos += 1
            exp = 1
            nxt = peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
                caret = nxt[2]
                pos += 1
                e = peek()
                if e is None or e[0] != "num" or "/" in e[1] or int(e[1]) <= 0:
                    raise ParseError("exponent must be a positive integer", caret)
                exp = int(e[1])
                pos += 1
            factors[idx] = factors.get(idx, 0) + exp
            saw_factor = True
            tok = peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                pos += 1
                tok = peek()
                if tok is None or tok[0] != "id":
                    raise ParseError("expected variable after '*'", tok[2] if tok else len(text))
        if not saw_factor:
            raise ParseError("expected a term", tok[2])
        terms.append((coeff, factors))

    used = max((i for _, fs in terms for i in fs), default=-1) + 1
    if nvars is None:
        nvars = max(used, 1)
    elif used > nvars:
        raise ParseError(f"variable x{used} exceeds {nvars} variables", 0)
    out = {}
    for c, fs in terms:
        m = tuple(fs.get(i, 0) for i in range(nvars))
        out[m] = out.get(m, 0) + c
    return WPolynomial(out, nvars)


def parse_weights(weights: str, total: Optional[str] = None) -> WeightSystem:
    """``"3,2"`` with total ``"6"``, or ``"3,2;6"``; entries may be rationals."""
    if total is None:
        if ";" not in weights:
            raise ValueError("total weight missing: use 'w1,...,wn;W' or pass a total")
        weights, total = weights.split(";", 1)
    try:
        ws = [Fraction(w.strip()) for w in weights.strip().strip("()").split(",")]
        tot = Fraction(str(total).strip().strip("()"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad weight input: {exc}") from None
    return WeightSystem.normalize(ws, tot)
