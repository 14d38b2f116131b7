"""Executable theorem checks over computed characters.

Every check returns a :class:`CheckReport`.  A check only passes for inputs in
the scope of the statement it encodes; other inputs are reported as skipped.
Windowed (truncated) characters are checked within the window and the report
says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algorithm import fundamental_qcharacter, standard_qcharacter
from .cartan import CartanData
from .character import Character
from .fixtures import APPENDIX_SHIFT, FixtureEntry, load_appendix, load_dimensions
from .laurent import TPoly
from .monomial import dominance_compare, is_dominant, is_right_negative, u_stats
from .qt import TCharacter, bar_symmetrize, qt_standard, specialize_t1

PASS, FAIL, SKIP = "pass", "fail", "skipped"
MAX_WITNESSES = 10


@dataclass
class CheckReport:
    name: str
    target: str
    verdict: str
    witnesses: list = field(default_factory=list)
    detail: str = ""

    def __post_init__(self):
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def record(self) -> dict:
        return {"name": self.name, "target": self.target, "verdict": self.verdict,
                "detail": self.detail,
                "witnesses": [[str(m), str(c)] for m, c in self.witnesses[:MAX_WITNESSES]]}


def _report(name, target, witnesses, detail="") -> CheckReport:
    return CheckReport(name, target, FAIL if witnesses else PASS, witnesses[:MAX_WITNESSES], detail)


def _target(ch) -> str:
    cd = ch.cartan
    base = f"{cd.name if cd else '?'} head {ch.head}"
    if ch.truncated:
        base += f" (window: height <= {ch.meta.get('max_height')})"
    return base


def _window_note(ch) -> str:
    return f"checked within height <= {ch.meta.get('max_height')}" if ch.truncated else ""


def format_table(reports) -> str:
    rows = [(r.verdict.upper(), r.name, r.target, r.detail) for r in reports]
    w1 = max([len(r[1]) for r in rows] + [5])
    out = []
    for v, n, t, d in rows:
        out.append(f"{v:<8} {n:<{w1}}  {t}" + (f"  [{d}]" if d else ""))
    for r in reports:
        for m, c in r.witnesses[:3]:
            out.append(f"    witness ({r.name}): {c} {m}")
    return "\n".join(out)


# -- structural checks -------------------------------------------------------

def check_dominance(ch: Character, cd: CartanData | None = None) -> CheckReport:
    """Every term lies below the head in the dominance order."""
    cd = cd or ch.cartan
    bad = [(m, c) for m, c in ch.items() if dominance_compare(cd, m, ch.head) is None]
    return _report("dominance", _target(ch), bad, _window_note(ch))


def check_right_negative(ch: Character) -> CheckReport:
    """Every non-head term is right-negative."""
    bad = [(m, c) for m, c in ch.items() if m != ch.head and not is_right_negative(m)]
    return _report("right-negative", _target(ch), bad, _window_note(ch))


def check_unique_dominant(ch: Character) -> CheckReport:
    bad = [(m, c) for m, c in ch.items() if m != ch.head and is_dominant(m)]
    return _report("unique-dominant", _target(ch), bad, _window_note(ch))


def check_kernel(ch: Character, cd: CartanData | None = None) -> CheckReport:
    """Greedy decomposition in every single-node kernel leaves no residue."""
    from .algorithm import NonzeroResidue, kernel_decompose
    cd = cd or ch.cartan
    if ch.truncated:
        return CheckReport("kernel-oracle", _target(ch), SKIP, detail="needs an untruncated character")
    bad = []
    negative = 0
    for j in cd.nodes:
        try:
            parts = kernel_decompose(cd, ch, [j])
        except NonzeroResidue as exc:
            bad += [(m, c) for m, c in exc.residue.items()]
            continue
        negative += sum(1 for _, c in parts if c < 0)
    return _report("kernel-oracle", _target(ch), bad, f"{negative} negative kernel coefficients")


MULT_ONE_FAMILIES = ("A", "AffineA", "B", "C")


def check_multiplicity_one(ch: Character, scope: str = "theorem") -> CheckReport:
    """All exponents u_{j,l} <= 1 and all coefficients 1 (types A, A^(1), B, C).

    ``scope="any"`` evaluates the property outside those families too.
    """
    fam = ch.cartan.family if ch.cartan else None
    if scope == "theorem" and fam not in MULT_ONE_FAMILIES:
        return CheckReport("multiplicity-one", _target(ch), SKIP, detail=f"family {fam} out of scope")
    bad = [(m, c) for m, c in ch.items() if c != 1 or any(e > 1 for _, e in m.items())]
    return _report("multiplicity-one", _target(ch), bad, _window_note(ch))


def _bound_violations(ch: Character, bound) -> list:
    bad = []
    for m, c in ch.items():
        for j in ch.cartan.nodes:
            if is_dominant(m, [j]) and u_stats(m, [j]).total > bound(j):
                bad.append((m, c))
                break
    return bad


def check_bn_bound(ch: Character) -> CheckReport:
    """Type B_n: a j-dominant term has u_j <= 2."""
    if ch.cartan is None or ch.cartan.family != "B":
        return CheckReport("B_n degree bound", _target(ch), SKIP, detail="not type B")
    return _report("B_n degree bound", _target(ch), _bound_violations(ch, lambda j: 2))


def check_cn_bound(ch: Character) -> CheckReport:
    """Type C_n: an n-dominant term has u_n <= 1, a j-dominant term (j < n) has u_j <= 2."""
    if ch.cartan is None or ch.cartan.family != "C":
        return CheckReport("C_n degree bound", _target(ch), SKIP, detail="not type C")
    n = ch.cartan.rank
    return _report("C_n degree bound", _target(ch),
                   _bound_violations(ch, lambda j: 1 if j == n else 2))


def check_shift_equivariance(cd: CartanData, i: int, l: int, c: int, **limits) -> CheckReport:
    a = fundamental_qcharacter(cd, i, l + c, **limits)
    b = fundamental_qcharacter(cd, i, l, **limits).translate(c)
    bad = [(m, a[m]) for m in a.monomials() if b[m] != a[m]]
    bad += [(m, b[m]) for m in b.monomials() if m not in a]
    return _report("shift-equivariance", f"{cd.name} node {i} shift {l} by {c}", bad)


# -- golden and q,t checks ---------------------------------------------------

def check_f4_appendix(classical: dict[int, Character], qt: dict[int, TCharacter],
                      appendix: dict[int, list[FixtureEntry]] | None = None,
                      dimensions: dict[int, tuple[int, int]] | None = None) -> list[CheckReport]:
    """Compare computed F4 fundamentals (keyed by node, head Y_{i,0}) with the golden data."""
    appendix = load_appendix() if appendix is None else appendix
    dimensions = load_dimensions() if dimensions is None else dimensions
    reports = []
    for node, (dim, count) in sorted(dimensions.items()):
        ch = classical[node]
        got = (len(ch), ch.coefficient_sum())
        bad = [] if got == (count, dim) else [(ch.head, f"{got[0]} monomials, sum {got[1]}")]
        reports.append(_report("F4 dimensions", f"node {node}", bad,
                               f"expected {count} monomials, sum {dim}"))
    for node in sorted(qt):
        tch = qt[node]
        bars = {m.translate(APPENDIX_SHIFT): bar_symmetrize(p) for m, p in tch.by_monomial().items()}
        listed = {e.monomial: e.coeff for e in appendix.get(node, [])}
        bad = []
        for m, p in listed.items():
            if m not in bars:
                bad.append((m, "listed but absent"))
            elif bars[m] != bar_symmetrize(p):
                bad.append((m, f"computed {bars[m]}, listed {p}"))
        for m, b in bars.items():
            if m not in listed and b != TPoly.const(1):
                bad.append((m, f"unlisted coefficient {b}"))
        at_one = specialize_t1(tch)
        if at_one != classical[node]:
            bad.append((tch.head, "t=1 specialization differs from the classical character"))
        reports.append(_report("F4 q,t coefficients", f"node {node}", bad,
                               f"{len(listed)} listed non-unit terms"))
    return reports


def check_qt_standard(cd: CartanData, factors) -> CheckReport:
    """Coefficients in N[t^{+-1}], same monomials as the classical product, t=1 identity."""
    tch = qt_standard(cd, factors)
    cl = standard_qcharacter(cd, factors)
    bad = [(tch.y(v), p) for v, p in tch.items() if not p.nonnegative()]
    by_m = tch.by_monomial()
    bad += [(m, "missing in q,t") for m in cl.monomials() if m not in by_m]
    bad += [(m, "extra in q,t") for m in by_m if m not in cl]
    if specialize_t1(tch) != cl:
        bad.append((tch.head, "t=1 specialization differs"))
    return _report("q,t standard", f"{cd.name} {list(factors)}", bad)


def structural_suite(ch: Character) -> list[CheckReport]:
    return [check_dominance(ch), check_right_negative(ch), check_unique_dominant(ch),
            check_kernel(ch)]
