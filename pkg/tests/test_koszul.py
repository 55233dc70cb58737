import pytest

from tjurina.gradedlin import default_bound, milnor_hilbert_profile
from tjurina.koszul import build_koszul, hilbert_from_euler, homology_rank, homology_table
from tjurina.parsing import parse_polynomial as P
from tjurina.series import expand
from tjurina.wpoly import DegenerateVariable, WeightSystem


def test_shifts():
    kc = build_koszul(P("x^2+y^3"), WeightSystem((3, 2), 6))
    assert kc.modules[1].generator_shifts == (3, 4)
    assert kc.modules[2].generator_shifts == (7,)
    kc = build_koszul(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3))
    assert kc.modules[1].generator_shifts == (2, 2, 2)
    assert kc.modules[2].generator_shifts == (4, 4, 4)
    assert kc.modules[3].generator_shifts == (6,)


def test_degenerate():
    with pytest.raises(DegenerateVariable):
        build_koszul(P("x^2", 2), WeightSystem((1, 1), 2))


def test_boundary_squared_zero(corpus_members):
    for text, f, ws in corpus_members:
        kc = build_koszul(f, ws)
        for d in range(21):
            assert kc.is_complex_in_degree(d), (text, d)


def test_homology_examples():
    kc = build_koszul(P("x^2+y^3"), WeightSystem((3, 2), 6))
    assert all(homology_rank(kc, 1, d) == 0 for d in range(21))
    h0 = {d: homology_rank(kc, 0, d) for d in range(21)}
    assert {d for d, v in h0.items() if v} == {0, 2}
    assert h0[0] == h0[2] == 1
    kc = build_koszul(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3))
    assert homology_rank(kc, 0, 1) == 3
    with pytest.raises(ValueError):
        homology_rank(kc, 4, 0)


def test_regular_sequence_on_corpus(corpus_members):
    for text, f, ws in corpus_members:
        kc = build_koszul(f, ws)
        table = homology_table(kc)
        for d, dims, hom in table:
            assert all(h == 0 for h in hom[1:]), (text, d)
            euler_dims = sum((-1) ** p * x for p, x in enumerate(dims))
            euler_hom = sum((-1) ** p * x for p, x in enumerate(hom))
            assert euler_dims == euler_hom


def test_non_isolated_has_higher_homology():
    kc = build_koszul(P("x^2*y^2"), WeightSystem((1, 1), 4))
    assert any(homology_rank(kc, 1, d) for d in range(12))


def test_hilbert_from_euler_examples():
    s = hilbert_from_euler(P("x^2+y^3"), WeightSystem((3, 2), 6))
    assert s.as_polynomial() == (1, 0, 1)
    s = hilbert_from_euler(P("x^3+y^3+z^3"), WeightSystem((1, 1, 1), 3))
    assert s.as_polynomial() == (1, 3, 3, 1)
    assert s.value_at_one() == 8
    s = hilbert_from_euler(P("x^2+y^2"), WeightSystem((1, 1), 2))
    assert s.as_polynomial() == (1,)


def test_hilbert_from_euler_matches_oracle(corpus_members):
    for text, f, ws in corpus_members:
        s = hilbert_from_euler(f, ws)
        prof = milnor_hilbert_profile(f, ws)
        K = default_bound(ws, 0)
        expected = [0] * (K + 1)
        for d, v in prof:
            expected[d] = v
        coeffs = expand(s, K)
        assert coeffs == expected, text
        assert all(c >= 0 for c in coeffs)
        assert sum(coeffs) == s.value_at_one() == int(ws.milnor_orlik_product())
        # H_0 of the Koszul complex is the Milnor algebra
        h0 = [hom[0] for _, _, hom in homology_table(build_koszul(f, ws), K)]
        assert h0 == expected, text


def test_non_divisible_weights():
    # 3 does not divide 8, so single factors are not polynomials; the product is
    f, ws = P("x^2*y + y^4"), WeightSystem((3, 2), 8)
    s = hilbert_from_euler(f, ws)
    assert s.as_polynomial() is not None
    assert s.value_at_one() == ws.milnor_orlik_product()
