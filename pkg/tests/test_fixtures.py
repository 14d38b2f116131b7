import pytest

from qtchar.fixtures import (FixtureError, appendix_text, emit_fixture, load_appendix, load_dimensions,
                             load_errata, parse_fixture)
from qtchar.laurent import TPoly
from qtchar.monomial import parse_monomial

LINE = "Monomial 70: (t^{-1} +t) Y_{1,10}Y_{2,7}Y^{-1}_{2,9}Y^{-1}_{2,11}Y_{4,6}"


def test_monomial_70_round_trip():
    [e] = parse_fixture("[rep 2]\n" + LINE + "\n")
    assert (e.rep, e.index) == (2, 70)
    assert e.coeff == TPoly({-1: 1, 1: 1})
    assert e.monomial == parse_monomial("Y_{1,10}Y_{2,7}Y^{-1}_{2,9}Y^{-1}_{2,11}Y_{4,6}")
    assert e.line() == LINE


def test_unit_coefficient_line():
    [e] = parse_fixture("[rep 1]\nMonomial 3: 1 Y^{-1}_{1,3}Y_{2,2}\n")
    assert e.coeff == TPoly.const(1)
    assert emit_fixture([e]) == "[rep 1]\nMonomial 3: 1 Y^{-1}_{1,3}Y_{2,2}\n"


@pytest.mark.parametrize("text,line_no", [
    ("[rep 2]\nMonomial 70 (t^{-1} +t) Y_{1,10}\n", 2),
    ("[rep 2]\n" + LINE + "\nMonomial 71: (t^{-1} +t) Y_{1,1O}\n", 3),
    ("Monomial 1: 1 Y_{1,1}\n", 1),
    ("[rep 2]\n\nMonomial 5: (t^{-1} +) Y_{1,1}\n", 3),
])
def test_malformed_lines(text, line_no):
    with pytest.raises(FixtureError) as err:
        parse_fixture(text)
    assert err.value.line_no == line_no
    assert f"line {line_no}" in str(err.value)


def test_shipped_appendix_round_trips_exactly():
    text = appendix_text()
    assert emit_fixture(parse_fixture(text)) == text


def test_shipped_data():
    raw = load_appendix(corrected=False)
    fixed = load_appendix()
    assert len(raw[2]) == len(fixed[2]) == 16
    assert (len(raw[3]), len(fixed[3])) == (172, 171)
    assert len(load_errata()) == 2
    assert load_dimensions() == {1: (26, 26), 2: (299, 283), 3: (1703, 1532), 4: (53, 53)}
