from fractions import Fraction

from hypothesis import given, settings, strategies as st

from wreath_growth import Field, SpanBasis, echelon_insert


def test_gf2_dependent_third_vector():
    basis = SpanBasis(Field.gf(2))
    flags = [echelon_insert(basis, v)[1] for v in ({0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1})]
    assert flags == [True, True, False]
    assert basis.rank == 2


def test_repeat_insert_is_not_new():
    basis = SpanBasis(Field.rationals())
    v = {3: Fraction(2), 5: Fraction(-1, 3)}
    assert echelon_insert(basis, v)[1]
    assert not echelon_insert(basis, dict(v))[1]


def test_rows_are_fully_reduced_with_unit_pivots():
    F = Field.gf(5)
    basis = SpanBasis(F)
    for v in ({0: 2, 1: 3, 4: 1}, {1: 1, 2: 4}, {0: 1, 2: 2, 3: 3}, {2: 1, 4: 4}):
        basis.insert(v)
    for piv, row in basis.rows.items():
        assert row[piv] == 1
        others = set(basis.rows) - {piv}
        assert not others & set(row)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 6), st.integers(1, 2), max_size=5), max_size=10))
def test_rank_matches_dense_elimination(vectors):
    import numpy as np
    from wreath_growth.dense import DenseRank
    basis, dense = SpanBasis(Field.gf(3)), DenseRank(3, 7)
    for v in vectors:
        basis.insert(dict(v))
        arr = np.zeros(7, dtype=np.int64)
        for k, c in v.items():
            arr[k] = c
        dense.insert(arr)
    assert basis.rank == dense.rank
