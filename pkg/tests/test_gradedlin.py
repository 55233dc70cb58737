from fractions import Fraction
from itertools import product

import pytest

from tjurina.gradedlin import (ConstrainedGenerator, DimensionNotFinite, GradedGeneratorSet,
                               default_bound, jet_oracle, milnor_hilbert_profile, milnor_ideal,
                               monomials_of_wdegree, mu_oracle, piece_dimension,
                               quotient_dimension, tau_oracle, tjurina_ideal)
from tjurina.parsing import parse_polynomial as P
from tjurina.wpoly import WeightSystem, WPolynomial, infer_weights


def dense_rank(rows):
    """Plain Gauss-Jordan over Fractions."""
    mat = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            if mat[i][c]:
                q = mat[i][c] / mat[r][c]
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


def truncation_oracle(gens, n, D):
    """dim O / (I + m^D) by ungraded linear algebra in total degree < D.

    Independent of the weighted grading: every product x^beta * g with
    |beta| >= its minimum is truncated at total degree D.  When m^D lies in
    I this equals dim O / I.
    """
    basis = [m for m in product(range(D), repeat=n) if sum(m) < D]
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g, kmin in gens:
        for beta in basis:
            if sum(beta) < kmin:
                continue
            row = [0] * len(basis)
            for m, c in g.items():
                mm = tuple(a + b for a, b in zip(m, beta))
                if mm in index:
                    row[index[mm]] += c
            if any(row):
                rows.append(row)
    r = dense_rank(rows)
    return len(basis) - r


def _tau_gens(f, k):
    return [(f, 0)] + [(fi, k) for fi in f.gradient()]


def _mu_gens(f, k):
    return [(fi, k) for fi in f.gradient()]


def test_monomials_of_wdegree():
    assert monomials_of_wdegree(WeightSystem((3, 2), 6), 6) == ((2, 0), (0, 3))
    assert monomials_of_wdegree(WeightSystem((1, 1), 2), 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_of_wdegree(WeightSystem((3, 2), 6), 1) == ()


def test_monomials_complete():
    ws = WeightSystem((5, 3, 2), 30)
    for d in range(25):
        brute = {m for m in product(range(d + 1), repeat=3) if 5 * m[0] + 3 * m[1] + 2 * m[2] == d}
        got = monomials_of_wdegree(ws, d)
        assert set(got) == brute and len(got) == len(brute)
        assert list(got) == sorted(got, reverse=True)


def test_piece_dimension():
    ws = WeightSystem((3, 2), 6)
    gs = GradedGeneratorSet(ws, [ConstrainedGenerator(P("2*x", 2), 1), ConstrainedGenerator(P("3*y^2"), 1)])
    assert piece_dimension(gs, 6) == (2, 2)
    # the only monomial of degree 4 is y^2; the cofactor 1 of 3y^2 is not admissible
    assert piece_dimension(gs, 4) == (1, 0)
    assert piece_dimension(gs, 1) == (0, 0)


def test_quotient_dimension_examples():
    f, ws = P("x^2+y^3"), WeightSystem((3, 2), 6)
    # m J(f) = (x^2, xy, y^3): classes 1, x, y, y^2
    prof = quotient_dimension(milnor_ideal(f, ws, 1), default_bound(ws, 1))
    assert prof.total == 4
    assert prof.hilbert_function() == [(0, 1), (2, 1), (3, 1), (4, 1)]
    assert quotient_dimension(tjurina_ideal(f, ws, 0), default_bound(ws, 0)).total == 2
    unit = GradedGeneratorSet(ws, [ConstrainedGenerator(WPolynomial.constant(1, 2), 0)])
    assert quotient_dimension(unit, 10).total == 0


def test_oracle_examples():
    f, ws = P("x^2+y^3"), WeightSystem((3, 2), 6)
    assert mu_oracle(f, ws, 1) == 4
    assert tau_oracle(f, ws, 2) == 6
    assert tau_oracle(f, ws, 3) == 8
    assert jet_oracle(P("x^2+y^2"), WeightSystem((1, 1), 2), 3) == 5
    assert jet_oracle(f, ws, 0) == 0


@pytest.mark.parametrize("text", ["x^2+y^3", "x^2+y^2", "x^2*y+y^3", "x^2+y^4", "x^3+y^3+z^3"])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_oracles_match_truncation(text, k):
    f = P(text)
    ws = infer_weights(f)
    mu0 = int(ws.milnor_orlik_product())
    D = mu0 + k  # m^(mu0 + k) lies in m^k J(f)
    assert mu_oracle(f, ws, k) == truncation_oracle(_mu_gens(f, k), f.nvars, D)
    assert tau_oracle(f, ws, k) == truncation_oracle(_tau_gens(f, k), f.nvars, D)


def test_milnor_hilbert_profile():
    assert milnor_hilbert_profile(P("x^2+y^3"), WeightSystem((3, 2), 6)) == [(0, 1), (2, 1)]
    assert milnor_hilbert_profile(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3)) == \
        [(0, 1), (1, 3), (2, 3), (3, 1)]
    assert milnor_hilbert_profile(P("x^2+y^2"), WeightSystem((1, 1), 2)) == [(0, 1)]


def test_non_isolated_rejected():
    f, ws = P("x^2*y^2"), WeightSystem((1, 1), 4)
    for oracle in (mu_oracle, tau_oracle):
        with pytest.raises(DimensionNotFinite, match="not finite within bound"):
            oracle(f, ws, 1)


def test_not_homogeneous_rejected():
    with pytest.raises(ValueError):
        tau_oracle(P("x^2+y^3"), WeightSystem((1, 1), 2), 0)


def test_generator_order_irrelevant():
    f, ws = P("x^2*y+y^3"), WeightSystem((1, 1), 3)
    gs = tjurina_ideal(f, ws, 2)
    rev = GradedGeneratorSet(ws, tuple(reversed(gs.gens)))
    assert quotient_dimension(gs, 40).total == quotient_dimension(rev, 40).total


def test_early_exit_sound(corpus_members):
    for text, f, ws in corpus_members:
        for k in (0, 2, 5):
            for oracle in (mu_oracle, tau_oracle, jet_oracle):
                assert oracle(f, ws, k) == oracle(f, ws, k, early_exit=False), (text, k)


def test_monotone_and_ordered(corpus_members):
    for text, f, ws in corpus_members:
        mu = [mu_oracle(f, ws, k) for k in range(13)]
        tau = [tau_oracle(f, ws, k) for k in range(13)]
        assert all(t <= m for t, m in zip(tau, mu)), text
        assert mu == sorted(mu) and tau == sorted(tau), text
        assert tau[0] == mu[0], text


def test_parallel_matches_serial():
    from concurrent.futures import ProcessPoolExecutor
    f, ws = P("x^3+y^4+z^5"), WeightSystem((20, 15, 12), 60)
    with ProcessPoolExecutor(max_workers=2) as ex:
        par = quotient_dimension(tjurina_ideal(f, ws, 4), default_bound(ws, 4), executor=ex)
    ser = quotient_dimension(tjurina_ideal(f, ws, 4), default_bound(ws, 4))
    assert par.total == ser.total == tau_oracle(f, ws, 4)
    assert par.per_degree == ser.per_degree
