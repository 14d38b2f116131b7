import pytest

from qtchar.algorithm import fundamental_qcharacter
from qtchar.cartan import build_cartan
from qtchar.character import Character
from qtchar.checks import (FAIL, PASS, SKIP, CheckReport, check_bn_bound, check_cn_bound,
                           check_dominance, check_f4_appendix, check_kernel,
                           check_multiplicity_one, check_qt_standard, check_right_negative,
                           check_shift_equivariance, check_unique_dominant, format_table)
from qtchar.fixtures import FixtureEntry, load_appendix
from qtchar.monomial import Monomial, parse_monomial
from qtchar.qt import fundamental_qt

P = parse_monomial
SL2 = build_cartan("A", 1)
F4 = build_cartan("F", 4)


def _with_extra(ch, m, c=1):
    return Character(ch.as_dict() | {m: c}, head=ch.head, cartan=ch.cartan)


def test_report_needs_witness():
    with pytest.raises(ValueError):
        CheckReport("x", "y", FAIL)


def test_dominance():
    ch = fundamental_qcharacter(SL2, 1, 0)
    assert check_dominance(ch).verdict == PASS
    bad = check_dominance(_with_extra(ch, P("Y_{1,4}")))
    assert bad.verdict == FAIL and bad.witnesses[0][0] == P("Y_{1,4}")
    win = fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0, max_height=5)
    rep = check_dominance(win)
    assert rep.verdict == PASS and "height <= 5" in rep.target


def test_right_negative_and_unique_dominant():
    ch = fundamental_qcharacter(SL2, 1, 0)
    assert check_right_negative(ch).ok and check_unique_dominant(ch).ok
    assert not check_right_negative(_with_extra(ch, P("Y^{-1}_{1,2}Y_{1,4}"))).ok
    assert not check_unique_dominant(_with_extra(ch, P("Y_{1,-2}"))).ok


def test_kernel_oracle():
    ch = fundamental_qcharacter(build_cartan("B", 3), 2, 0)
    assert check_kernel(ch).ok
    broken = Character({m: c for m, c in ch.items() if m != ch.monomials()[-1]}, head=ch.head,
                       cartan=ch.cartan)
    assert check_kernel(broken).verdict == FAIL
    win = fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0, max_height=4)
    assert check_kernel(win).verdict == SKIP


def test_multiplicity_one_scope():
    a3 = build_cartan("A", 3)
    assert all(check_multiplicity_one(fundamental_qcharacter(a3, i, 0)).ok for i in a3.nodes)
    b2 = build_cartan("B", 2)
    assert all(check_multiplicity_one(fundamental_qcharacter(b2, i, 0)).ok for i in b2.nodes)
    f4_3 = fundamental_qcharacter(F4, 3, 0)
    assert check_multiplicity_one(f4_3).verdict == SKIP
    rep = check_multiplicity_one(f4_3, scope="any")
    assert rep.verdict == FAIL
    assert any(max(e for _, e in m.items()) == 2 for m, _ in rep.witnesses)


def test_bounds():
    for n in (2, 3):
        b = build_cartan("B", n)
        c = build_cartan("C", n)
        assert all(check_bn_bound(fundamental_qcharacter(b, i, 0)).ok for i in b.nodes)
        assert all(check_cn_bound(fundamental_qcharacter(c, i, 0)).ok for i in c.nodes)
    b2 = fundamental_qcharacter(build_cartan("B", 2), 1, 0)
    assert not check_bn_bound(_with_extra(b2, P("Y^3_{1,8}"))).ok
    assert check_bn_bound(fundamental_qcharacter(F4, 1, 0)).verdict == SKIP
    c2 = fundamental_qcharacter(build_cartan("C", 2), 1, 0)
    assert not check_cn_bound(_with_extra(c2, P("Y^2_{2,9}"))).ok
    assert not check_cn_bound(_with_extra(c2, P("Y^3_{1,9}"))).ok
    assert check_cn_bound(b2).verdict == SKIP


def test_shift_equivariance():
    assert check_shift_equivariance(SL2, 1, 0, 2).ok
    assert check_shift_equivariance(SL2, 1, 3, 0).ok
    assert check_shift_equivariance(F4, 4, 0, 5).ok


def test_f4_appendix_and_perturbation():
    cl = {i: fundamental_qcharacter(F4, i, 0) for i in F4.nodes}
    qt = {i: fundamental_qt(F4, i, 0) for i in (2,)}
    assert all(r.ok for r in check_f4_appendix(cl, qt))
    app = load_appendix()
    e = app[2][0]
    moved = e.monomial * Monomial.Y(4, 8)
    app[2] = [FixtureEntry(e.rep, e.index, e.coeff, moved)] + app[2][1:]
    reports = check_f4_appendix(cl, qt, appendix=app)
    bad = [r for r in reports if not r.ok]
    assert bad and any(w[0] == moved for r in bad for w in r.witnesses)
    assert "witness" in format_table(bad)


def test_qt_standard_checks():
    assert check_qt_standard(SL2, [(1, 0), (1, 2)]).ok
    assert check_qt_standard(build_cartan("B", 2), [(1, 0), (2, 3)]).ok
    assert check_qt_standard(F4, [(4, 0)]).ok
