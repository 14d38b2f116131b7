import pytest

from qtchar.cartan import (CartanError, build_cartan, check_invertible, is_invertible,
                           minimal_symmetrizer, parse_family, quantized_cartan, sufficient_condition)
from qtchar.laurent import LaurentPoly
from qtchar.monomial import a_monomial, parse_monomial

FAMILIES = [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 5)] + \
    [("C", n) for n in range(2, 5)] + [("D", 4), ("D", 5), ("F", 4), ("G", 2), ("AffineA", 2),
                                       ("AffineA", 3)]
z = LaurentPoly.monomial


def test_sl2():
    cd = build_cartan("A", 1)
    assert cd.matrix == ((2,),)
    assert cd.symmetrizer == (1,)
    qc = quantized_cartan(cd)
    assert qc[0, 0] == z(1, var="z") + z(-1, var="z")
    assert is_invertible(qc)


@pytest.mark.parametrize("family,rank", FAMILIES)
def test_cartan_axioms(family, rank):
    cd = build_cartan(family, rank)
    n = len(cd.nodes)
    C, r = cd.matrix, cd.symmetrizer
    for a in range(n):
        assert C[a][a] == 2
        for b in range(n):
            if a != b:
                assert C[a][b] <= 0
                assert (C[a][b] == 0) == (C[b][a] == 0)
                assert r[a] * C[a][b] == r[b] * C[b][a]
    assert min(r) == 1 and minimal_symmetrizer(C) == r


@pytest.mark.parametrize("family,rank", FAMILIES)
def test_quantized_cartan_at_one(family, rank):
    cd = build_cartan(family, rank)
    qc = quantized_cartan(cd)
    n = len(cd.nodes)
    assert all(qc[a, b].at_one() == cd.matrix[a][b] for a in range(n) for b in range(n))
    check_invertible(cd)
    assert sufficient_condition(cd)


def test_quantized_cartan_entries():
    # C_2: the short node 1 has C_12 = -2, giving [-2]_z = -(z + z^{-1})
    qc = quantized_cartan(build_cartan("C", 2))
    assert qc[0, 1] == -(z(1, var="z") + z(-1, var="z"))
    assert qc[1, 0] == LaurentPoly.const(-1, var="z")
    assert qc[1, 1] == z(2, var="z") + z(-2, var="z")
    assert quantized_cartan(build_cartan("A", 2))[0, 1] == LaurentPoly.const(-1, var="z")


def test_invertibility_examples():
    assert is_invertible(quantized_cartan(build_cartan("F", 4)))
    assert is_invertible(quantized_cartan(build_cartan("AffineA", 2)))


def test_symmetrizers():
    assert build_cartan("B", 3).symmetrizer == (2, 2, 1)
    assert build_cartan("C", 3).symmetrizer == (1, 1, 2)
    assert build_cartan("F", 4).symmetrizer == (1, 1, 2, 2)
    assert build_cartan("G", 2).symmetrizer == (3, 1)


def test_a_terms_match_displays():
    c3 = build_cartan("C", 3)
    assert a_monomial(c3, 1, 5) == parse_monomial("Y_{1,4}Y_{1,6}Y^{-1}_{2,5}")
    b3 = build_cartan("B", 3)
    assert a_monomial(b3, 3, 5) == parse_monomial("Y_{3,4}Y_{3,6}Y^{-1}_{2,5}")
    assert a_monomial(b3, 2, 5) == parse_monomial("Y^{-1}_{1,5}Y_{2,3}Y_{2,7}Y^{-1}_{3,4}Y^{-1}_{3,6}")


def test_parse_family():
    assert parse_family("F4").name == "F4"
    assert parse_family("A2~").family == "AffineA"
    assert not parse_family("A2~").is_finite_type()
    for bad in ("Q3", "F5", "B2~", "A0", ""):
        with pytest.raises(CartanError):
            parse_family(bad)


def test_subdiagram():
    f4 = build_cartan("F", 4)
    sub = f4.subdiagram([1, 2])
    assert sub.is_finite_type()
    assert sub.matrix == ((2, -1), (-1, 2))
    assert not build_cartan("AffineA", 2).is_finite_type()
