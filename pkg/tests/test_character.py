import pytest
from hypothesis import given, strategies as st

from qtchar.algorithm import fundamental_qcharacter
from qtchar.cartan import build_cartan
from qtchar.character import (Character, CoefficientModeError, height_slices, j_dominant_terms)
from qtchar.laurent import TPoly
from qtchar.monomial import Monomial, parse_monomial

P = parse_monomial
SL2 = build_cartan("A", 1)

monos = st.dictionaries(st.tuples(st.integers(1, 2), st.integers(0, 4)), st.integers(-2, 2),
                        max_size=3).map(Monomial)
chars = st.dictionaries(monos, st.integers(-3, 3), max_size=4).map(Character)


def test_product_example():
    a = Character({P("Y_{1,0}"): 1, P("Y^{-1}_{1,2}"): 1})
    b = Character({P("Y_{1,2}"): 1, P("Y^{-1}_{1,4}"): 1})
    expected = Character({P("Y_{1,0}Y_{1,2}"): 1, P("Y_{1,0}Y^{-1}_{1,4}"): 1, Monomial.one(): 1,
                          P("Y^{-1}_{1,2}Y^{-1}_{1,4}"): 1})
    assert a * b == expected
    assert a * Character.unit() == a
    assert a * Character.zero() == Character.zero()
    assert len(a * Character.zero()) == 0


def test_no_zero_coefficients():
    ch = Character({Monomial.Y(1, 0): 1}) - Character({Monomial.Y(1, 0): 1})
    assert len(ch) == 0


def test_modes():
    t = Character({Monomial.Y(1, 0): TPoly({1: 1})})
    assert t.mode == "t"
    with pytest.raises(CoefficientModeError):
        t + Character({Monomial.Y(1, 0): 1})
    assert (Character({Monomial.Y(1, 0): 2}).to_t())[Monomial.Y(1, 0)] == TPoly.const(2)


@given(chars, chars, chars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b - b == a
    assert (a * b).coefficient_sum() == a.coefficient_sum() * b.coefficient_sum()


def test_height_slices():
    ch = fundamental_qcharacter(SL2, 1, 0)
    assert height_slices(SL2, ch) == [(0, [(P("Y_{1,0}"), 1)]), (1, [(P("Y^{-1}_{1,2}"), 1)])]
    single = Character.single(Monomial.Y(1, 0))
    assert height_slices(SL2, single) == [(0, [(Monomial.Y(1, 0), 1)])]
    assert height_slices(SL2, Character.zero(), Monomial.Y(1, 0)) == []


def test_j_dominant_terms():
    ch = Character({P("Y_{1,0}"): 1, P("Y^{-1}_{1,2}"): 1, P("Y_{1,0}Y^{-1}_{2,3}"): 2})
    assert j_dominant_terms(ch, [1, 2]) == [(P("Y_{1,0}"), 1)]
    assert {m for m, _ in j_dominant_terms(ch, [1])} == {P("Y_{1,0}"), P("Y_{1,0}Y^{-1}_{2,3}")}
    assert len(j_dominant_terms(ch, [])) == 3


def test_translate():
    ch = fundamental_qcharacter(SL2, 1, 0)
    assert ch.translate(4) == fundamental_qcharacter(SL2, 1, 4)
