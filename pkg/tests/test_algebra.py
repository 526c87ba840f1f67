import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreath_growth import (AssociativityError, Field, GeneratingSequence, MalformedElementError,
                           MonomialQuotientAlgebra, PolynomialAlgebra, StructureConstantAlgebra,
                           weighted_filtration_W)
from wreath_growth.checks import check_algebra_laws


def test_polynomial_square(F2x):
    x = F2x.gen("x")
    assert x * x == F2x.parse("x^2")


def test_unit_law(F2xy):
    y = F2xy.parse("x*y + y^3")
    assert F2xy.one() * y == y and y * F2xy.one() == y


def test_monomial_quotient_deletes_forbidden_factor(F2):
    A = MonomialQuotientAlgebra(F2, ["x", "y"], forbidden=["yx"])
    x, y = A.gen("x"), A.gen("y")
    assert (x + y) * x == A.parse("x^2")


def test_monomial_quotient_labels_are_normal(F2):
    A = MonomialQuotientAlgebra(F2, ["x", "y"], forbidden=["yx", "xyx"])
    rng = random.Random(3)
    for _ in range(200):
        e = A.random_element(rng)
        assert all(A.is_normal(l) for l in e.terms)


def test_mixing_algebras_is_malformed(F2x, F2xy):
    with pytest.raises(MalformedElementError):
        F2x.gen("x") * F2xy.gen("y")


def test_parser_reads_rational_coefficients():
    Q = PolynomialAlgebra(Field.rationals(), ["x", "y"])
    e = Q.parse("1/2*x^2 - (x + y)*y")
    assert e.terms[(2, 0)] == Fraction(1, 2)
    assert e.terms[(1, 1)] == -1 and e.terms[(0, 2)] == -1


@pytest.mark.parametrize("bad", ["x +", "x^", "z", "(x"])
def test_parser_rejects(F2x, bad):
    with pytest.raises(MalformedElementError):
        F2x.parse(bad)


def test_structure_constants_associativity_error(F2):
    # e0 e0 = e1, e0 e1 = e0, e1 e0 = e0, e1 e1 = e0: (e0 e0) e1 != e0 (e0 e1)
    table = [[{1: 1}, {0: 1}], [{0: 1}, {0: 1}]]
    with pytest.raises(AssociativityError) as err:
        StructureConstantAlgebra(F2, table)
    assert len(err.value.triple) == 3


def test_structure_constants_find_unit():
    F3 = Field.gf(3)
    A = StructureConstantAlgebra(F3, [[{0: 1}, {1: 1}], [{1: 1}, {}]], names=["one", "e"])
    assert A.one() == A.parse("one")
    assert A.parse("e") * A.parse("e") == A.zero()


def test_nonunital_table_gets_formal_unit(F2):
    A = StructureConstantAlgebra(F2, [[{}]])
    assert A.unit_adjoined
    e = A.basis(0)
    assert A.one() * e == e and e * e == A.zero()


def test_filtration_single_generator(F2x, seq_x):
    W = weighted_filtration_W(seq_x, 3, F2x)
    assert set(W) == {F2x.parse("x"), F2x.parse("x^2"), F2x.parse("x^3")}


def test_filtration_zero_sequence(F2x):
    assert weighted_filtration_W(GeneratingSequence(F2x, {}), 5, F2x) == []


def test_filtration_two_weights(F2xy):
    c = GeneratingSequence(F2xy, {1: F2xy.gen("x"), 3: F2xy.gen("y")})
    got = set(weighted_filtration_W(c, 4, F2xy))
    want = {F2xy.parse(s) for s in ["x", "x^2", "x^3", "x^4", "y", "x*y"]}
    assert got == want


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 7))
def test_filtration_is_nested(F2xy, n):
    c = GeneratingSequence(F2xy, {1: F2xy.gen("x"), 2: F2xy.parse("x+y"), 4: F2xy.gen("y")})
    assert set(weighted_filtration_W(c, n, F2xy)) <= set(weighted_filtration_W(c, n + 1, F2xy))


@pytest.mark.parametrize("make", [
    lambda: PolynomialAlgebra(Field.gf(2), ["x", "y"]),
    lambda: PolynomialAlgebra(Field.rationals(), ["x"]),
    lambda: MonomialQuotientAlgebra(Field.gf(3), ["a", "b"], forbidden=["ba", "aab"]),
    lambda: StructureConstantAlgebra(Field.rationals(),
                                     [[{0: 1}, {1: 1}, {2: 1}],
                                      [{1: 1}, {2: 1}, {}],
                                      [{2: 1}, {}, {}]]),
], ids=["F2[x,y]", "Q[x]", "GF3<a,b>/(ba,aab)", "Q[e]/e^3"])
def test_algebra_laws_1000_triples(make):
    report = check_algebra_laws(make(), samples=1000, seed=11)
    assert report.passed, report.witnesses
