from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tjurina.linalg import EchelonBasis, primitive_row, rank, rank_mod_p


def _dense(rows, ncols):
    return [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]


def test_small():
    assert rank([]) == 0
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert rank([{0: Fraction(1, 2)}, {1: Fraction(1, 3)}, {0: 1, 1: 1}]) == 2
    assert rank([{0: 1}, {1: 1}, {2: 1}], limit=2) == 2


def test_primitive_row():
    assert primitive_row({3: Fraction(-1, 2), 5: Fraction(1, 3)}) == {3: 3, 5: -2}
    assert primitive_row({0: 0}) == {}


def test_echelon_membership():
    eb = EchelonBasis()
    eb.add({0: 1, 1: 1})
    eb.add({1: 1, 2: 1})
    assert eb.contains({0: 1, 2: -1})
    assert not eb.contains({2: 1})


rows_strategy = st.integers(1, 7).flatmap(lambda ncols: st.tuples(
    st.just(ncols),
    st.lists(st.dictionaries(st.integers(0, ncols - 1), st.integers(-6, 6), max_size=ncols),
             max_size=9)))


@settings(max_examples=200, deadline=None)
@given(rows_strategy)
def test_rank_matches_sympy(data):
    ncols, rows = data
    expected = sympy.Matrix(_dense(rows, ncols)).rank() if rows else 0
    assert rank(rows) == expected
    assert rank(list(reversed(rows))) == expected
    assert rank_mod_p(rows) <= expected
