"""The acceptance criteria as runnable suites (used by ``qtchar verify`` and the tests)."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algorithm import fundamental_qcharacter
from .cartan import build_cartan
from .checks import (CheckReport, FAIL, PASS, _report, check_bn_bound, check_cn_bound,
                     check_f4_appendix, check_multiplicity_one, check_qt_standard,
                     check_shift_equivariance, structural_suite)
from .monomial import Monomial
from .qt import fundamental_qt, qt_standard, specialize_t1, star_t
from .serialize import emit_character

AFFINE_WINDOW = 8


@dataclass
class CriterionResult:
    number: int
    title: str
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.reports) and all(r.verdict == PASS for r in self.reports)

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'} - {self.title}"


def _fundamentals(family: str, rank: int, **kw):
    cd = build_cartan(family, rank)
    return cd, {i: fundamental_qcharacter(cd, i, 0, **kw) for i in cd.nodes}


def _abc_families():
    return ([("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 5)]
            + [("C", n) for n in range(2, 5)])


def criterion_1() -> CriterionResult:
    cd, cl = _fundamentals("F", 4)
    reports = [r for r in check_f4_appendix(cl, {}) if r.name == "F4 dimensions"]
    return CriterionResult(1, "F4 fundamental monomial counts and dimensions", reports)


def criterion_2() -> CriterionResult:
    cd = build_cartan("D", 4)
    trivalent = next(i for i in cd.nodes if len(cd.neighbors(i)) == 3)
    found = []
    for j in [trivalent] + [i for i in cd.nodes if i != trivalent]:
        ch = fundamental_qcharacter(cd, j, 0)
        m = Monomial({(j, 2): 1, (j, 4): -1})
        if ch[m] == 2:
            found.append((j, m))
            break
    ok = found and found[0][0] == trivalent
    rep = CheckReport("D4 coefficient 2", f"D4 node {trivalent}", PASS if ok else FAIL,
                      [] if ok else [(Monomial({(trivalent, 2): 1, (trivalent, 4): -1}),
                                      f"found at {found}")],
                      detail=f"Y_{{{trivalent},2}}Y^{{-1}}_{{{trivalent},4}} has coefficient 2" if ok else "")
    return CriterionResult(2, "D4 trivalent node has a coefficient-2 monomial", [rep])


def criterion_3() -> CriterionResult:
    cd, cl = _fundamentals("F", 4)
    qt = {i: fundamental_qt(cd, i, 0) for i in cd.nodes}
    reports = [r for r in check_f4_appendix(cl, qt) if r.name != "F4 dimensions"]
    return CriterionResult(3, "F4 q,t-characters match the printed non-unit list", reports)


def criterion_4() -> CriterionResult:
    reports = []
    for fam, n in _abc_families():
        _, cl = _fundamentals(fam, n)
        reports += [check_multiplicity_one(ch) for ch in cl.values()]
    return CriterionResult(4, "types A, B, C: multiplicity one and unit coefficients", reports)


def criterion_5() -> CriterionResult:
    reports = []
    for l in (2, 3):
        _, cl = _fundamentals("AffineA", l, max_height=AFFINE_WINDOW)
        reports += [check_multiplicity_one(ch) for ch in cl.values()]
    return CriterionResult(5, f"affine A2~, A3~ windows (height <= {AFFINE_WINDOW}): multiplicity one",
                           reports)


def criterion_6() -> CriterionResult:
    reports = []
    for fam, n in _abc_families() + [("D", 4), ("G", 2), ("F", 4)]:
        _, cl = _fundamentals(fam, n)
        for ch in cl.values():
            reports += structural_suite(ch)
    return CriterionResult(6, "dominance, right-negativity, unique dominant, kernel oracle", reports)


def criterion_7() -> CriterionResult:
    reports = []
    for n in (2, 3, 4):
        _, cl = _fundamentals("B", n)
        reports += [check_bn_bound(ch) for ch in cl.values()]
        _, cl = _fundamentals("C", n)
        reports += [check_cn_bound(ch) for ch in cl.values()]
    return CriterionResult(7, "degree bounds for B_n and C_n", reports)


def _factor_lists(cd, shifts, max_factors: int, sample: int | None, seed: int = 7):
    pool = [(i, l) for i in cd.nodes for l in shifts]
    lists = []
    for k in range(1, max_factors + 1):
        lists += [list(c) for c in itertools.combinations_with_replacement(pool, k)]
    if sample is not None and len(lists) > sample:
        rng = random.Random(seed)
        lists = [x for x in lists if len(x) < max_factors] + \
            rng.sample([x for x in lists if len(x) == max_factors], sample)
    return lists


def criterion_8() -> CriterionResult:
    reports = []
    # specialization t = 1 on every tested fundamental
    for fam, n in _abc_families() + [("D", 4), ("G", 2), ("F", 4)]:
        cd, cl = _fundamentals(fam, n)
        bad = []
        for i, ch in cl.items():
            if specialize_t1(fundamental_qt(cd, i, 0)) != ch:
                bad.append((ch.head, "t=1 specialization differs"))
        reports.append(_report("t=1 specialization", cd.name, bad))
    # commutation at equal shifts in F4
    cd = build_cartan("F", 4)
    ft = {i: fundamental_qt(cd, i, 0) for i in cd.nodes}
    bad = []
    for i, j in itertools.combinations(cd.nodes, 2):
        if star_t(ft[i], ft[j]) != star_t(ft[j], ft[i]):
            bad.append((Monomial({(i, 0): 1, (j, 0): 1}), f"F_t(Y_{i},0) and F_t(Y_{j},0) do not commute"))
    reports.append(_report("equal-shift commutation", "F4", bad))
    # multiplicativity on shift-separated factor lists
    for fam, n, shifts in (("A", 1, range(0, 5)), ("B", 2, range(0, 5))):
        cd = build_cartan(fam, n)
        bad = []
        for f1, f2 in itertools.product(_factor_lists(cd, shifts, 2, None), repeat=2):
            if max(l for _, l in f1) > min(l for _, l in f2):
                continue
            lhs = qt_standard(cd, f1 + f2)
            rhs = star_t(qt_standard(cd, f1), qt_standard(cd, f2))
            if lhs != rhs:
                bad.append((lhs.head, f"{f1} | {f2}"))
        reports.append(_report("multiplicativity", cd.name, bad))
    # positivity and monomial sets for standard modules with at most 3 factors
    for fam, n, shifts in (("A", 2, range(0, 4)), ("B", 2, range(0, 5)), ("G", 2, range(0, 7))):
        cd = build_cartan(fam, n)
        sub = [check_qt_standard(cd, f) for f in _factor_lists(cd, shifts, 3, 80)]
        bad = [w for r in sub for w in r.witnesses]
        reports.append(_report("q,t standard modules", f"{cd.name} ({len(sub)} factor lists)", bad))
    return CriterionResult(8, "t-layer consistency", reports)


def criterion_9() -> CriterionResult:
    cd = build_cartan("F", 4)
    reports = [check_shift_equivariance(cd, 3, 0, c) for c in (1, 2, 5)]
    a = emit_character(fundamental_qcharacter(cd, 3, 0, workers=1))
    b = emit_character(fundamental_qcharacter(cd, 3, 0, workers=4))
    bad = [] if a == b else [(Monomial.Y(3, 0), "outputs differ between worker counts")]
    reports.append(_report("determinism", "F4 node 3, workers 1 vs 4", bad, f"{len(a)} bytes"))
    return CriterionResult(9, "shift equivariance and determinism on F4 node 3", reports)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}

SUITES = {
    "f4": (1, 3, 9),
    "d4": (2,),
    "abc": (4, 6, 7),
    "qt": (8,),
    "affine": (5,),
    "all": tuple(CRITERIA),
}


def run_suite(name: str) -> list[CriterionResult]:
    return [CRITERIA[n]() for n in SUITES[name]]
