import pytest

from qtchar.algorithm import (BudgetExceeded, NonzeroResidue, PreconditionError,
                              classical_algorithm, fundamental_qcharacter, kernel_decompose,
                              restrict_L_J, standard_qcharacter)
from qtchar.cartan import CartanError, build_cartan
from qtchar.character import Character
from qtchar.monomial import Monomial, dominance_compare, is_dominant, parse_monomial
from qtchar.sl2 import F_i

P = parse_monomial
SL2 = build_cartan("A", 1)
F4 = build_cartan("F", 4)

DIMENSIONS = {
    ("A", 3): [(4, 4), (6, 6), (4, 4)],
    ("B", 3): [(7, 7), (22, 22), (8, 8)],
    ("C", 3): [(6, 6), (14, 14), (14, 14)],
    ("D", 4): [(8, 8), (28, 29), (8, 8), (8, 8)],
    ("G", 2): [(15, 15), (7, 7)],
    ("F", 4): [(26, 26), (283, 299), (1532, 1703), (53, 53)],
}


def test_sl2_fundamental():
    assert fundamental_qcharacter(SL2, 1, 0) == Character({P("Y_{1,0}"): 1, P("Y^{-1}_{1,2}"): 1})


def test_a2_by_hand():
    ch = fundamental_qcharacter(build_cartan("A", 2), 1, 0)
    assert ch.monomials() == sorted([P("Y_{1,0}"), P("Y^{-1}_{1,2}Y_{2,1}"), P("Y^{-1}_{2,3}")],
                                    key=Monomial.sort_key)
    assert all(c == 1 for _, c in ch.items())


@pytest.mark.parametrize("family,rank", list(DIMENSIONS))
def test_fundamental_sizes(family, rank):
    cd = build_cartan(family, rank)
    for i, (count, dim) in zip(cd.nodes, DIMENSIONS[(family, rank)]):
        ch = fundamental_qcharacter(cd, i, 0)
        assert (len(ch), ch.coefficient_sum()) == (count, dim)


def test_d4_coefficient_two():
    ch = fundamental_qcharacter(build_cartan("D", 4), 2, 0)
    assert ch[P("Y_{2,2}Y^{-1}_{2,4}")] == 2
    assert [m for m, c in ch.items() if c != 1] == [P("Y_{2,2}Y^{-1}_{2,4}")]


def test_expansion_modes_agree():
    for cd in (F4, build_cartan("G", 2), build_cartan("D", 4)):
        for i in cd.nodes:
            head = Monomial.Y(i, 0)
            assert classical_algorithm(cd, head, expansion="F") == classical_algorithm(cd, head, expansion="L")


def test_workers_do_not_change_output():
    a = fundamental_qcharacter(F4, 2, 0, workers=1)
    b = fundamental_qcharacter(F4, 2, 0, workers=3)
    assert a.items() == b.items()


def test_v_vectors_are_consistent():
    ch = fundamental_qcharacter(F4, 4, 0)
    for m in ch.monomials():
        assert dominance_compare(F4, m, ch.head) == ch.meta["v"][m]


def test_standard_products():
    ch = standard_qcharacter(SL2, [(1, 0), (1, 2)])
    assert ch == Character({P("Y_{1,0}Y_{1,2}"): 1, P("Y_{1,0}Y^{-1}_{1,4}"): 1, Monomial.one(): 1,
                            P("Y^{-1}_{1,2}Y^{-1}_{1,4}"): 1})
    assert standard_qcharacter(F4, [(3, 2)]) == fundamental_qcharacter(F4, 3, 2)
    assert standard_qcharacter(F4, []) == Character.unit()


def test_limits():
    with pytest.raises(BudgetExceeded):
        fundamental_qcharacter(F4, 3, 0, max_terms=100)
    win = fundamental_qcharacter(F4, 3, 0, max_height=4)
    assert win.truncated and len(win) < 1532
    full = fundamental_qcharacter(F4, 3, 0)
    assert all(full[m] == c for m, c in win.items())
    with pytest.raises(PreconditionError):
        fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0)
    aff = fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0, max_height=6)
    assert aff.truncated and aff.meta["max_height"] == 6
    with pytest.raises(PreconditionError):
        classical_algorithm(SL2, P("Y^{-1}_{1,2}"))


def test_restrict_L_J():
    a2 = build_cartan("A", 2)
    for cd in (F4, build_cartan("B", 3), a2):
        for i in cd.nodes:
            m = P("Y_{%d,0}Y_{%d,4}" % (i, i))
            assert restrict_L_J(cd, m, [i]) == F_i(cd, i, m)
    assert restrict_L_J(a2, Monomial.Y(1, 0), [1, 2]) == fundamental_qcharacter(a2, 1, 0)
    sub = restrict_L_J(F4, Monomial.Y(1, 0), [1, 2])
    assert sub == Character({P("Y_{1,0}"): 1, P("Y^{-1}_{1,2}Y_{2,1}"): 1, P("Y^{-1}_{2,3}Y_{3,2}"): 1})
    with pytest.raises(CartanError):
        restrict_L_J(build_cartan("AffineA", 2), Monomial.Y(0, 0), [0, 1, 2])
    with pytest.raises(PreconditionError):
        restrict_L_J(F4, P("Y^{-1}_{1,2}"), [1])


def test_kernel_decompose():
    assert kernel_decompose(SL2, fundamental_qcharacter(SL2, 1, 0), [1]) == [(Monomial.Y(1, 0), 1)]
    parts = kernel_decompose(SL2, standard_qcharacter(SL2, [(1, 0), (1, 2)]), [1])
    assert sorted(parts, key=lambda p: p[0].sort_key()) == sorted(
        [(P("Y_{1,0}Y_{1,2}"), 1), (Monomial.one(), 1)], key=lambda p: p[0].sort_key())
    parts = kernel_decompose(F4, fundamental_qcharacter(F4, 1, 0), [4])
    assert all(c > 0 for _, c in parts)
    assert all(is_dominant(m, [4]) for m, _ in parts)


def test_kernel_decompose_residue():
    bad = fundamental_qcharacter(SL2, 1, 0) - Character({P("Y^{-1}_{1,2}"): 1})
    bad = Character(bad.as_dict() | {P("Y^{-1}_{1,2}Y^{-1}_{1,4}"): 1}, head=Monomial.Y(1, 0))
    with pytest.raises(NonzeroResidue):
        kernel_decompose(SL2, bad, [1])


@pytest.mark.parametrize("family,rank", list(DIMENSIONS))
def test_shift_lattice(family, rank):
    """Within each node all shifts of a fundamental character share one residue mod 2."""
    cd = build_cartan(family, rank)
    for i in cd.nodes:
        residues = {}
        for m in fundamental_qcharacter(cd, i, 0).monomials():
            for (j, l), _ in m.items():
                residues.setdefault(j, set()).add(l % 2)
        assert all(len(r) == 1 for r in residues.values())


@pytest.mark.parametrize("family,rank,head", [
    ("A", 1, "Y_{1,0}Y_{1,2}"), ("A", 1, "Y^2_{1,0}Y_{1,4}"), ("A", 2, "Y_{1,0}Y_{2,1}"),
    ("A", 2, "Y_{1,0}Y_{1,2}Y_{2,3}"), ("A", 2, "Y^2_{2,0}Y_{1,3}"),
])
def test_support_inside_product(family, rank, head):
    cd = build_cartan(family, rank)
    m = P(head)
    factors = [(i, l) for (i, l), e in m.items() for _ in range(e)]
    product = standard_qcharacter(cd, factors)
    assert set(classical_algorithm(cd, m).monomials()) <= set(product.monomials())
