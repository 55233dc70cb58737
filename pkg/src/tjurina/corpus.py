"""Regression corpus of isolated weighted homogeneous singularities."""

from .parsing import parse_polynomial
from .wpoly import infer_weights

CORPUS = (
    "x^2 + y^2",
    "x^2 + y^3",
    "x^2 + y^4",
    "x^2*y + y^3",
    "x^3 + y^3 + z^3",
    "x^2 + y^3 + z^5",
    "x^2 + y^2 + z^2",
    "x^2 + y^2 + z^3",
    "x^2 + y^2 + z^4",
    "x^2 + y^2 + z^5",
    "x^2 + y^3 + z^7",
    "x^3 + y^4 + z^5",
)

# x^2 y^2 has a line of singular points; weights (1,1;4) are supplied because inference is underdetermined
NON_ISOLATED = ("x^2*y^2", (1, 1), 4)


def load():
    """``[(text, f, ws)]`` for every corpus member."""
    out = []
    for text in CORPUS:
        f = parse_polynomial(text)
        out.append((text, f, infer_weights(f)))
    return out
