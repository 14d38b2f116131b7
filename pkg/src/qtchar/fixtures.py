"""Golden F4 data shipped with the package, in the appendix text syntax.

``f4_appendix.txt`` lists, per fundamental representation, the terms whose
coefficient is not 1, transcribed as printed, one line per monomial::

    [rep 2]
    Monomial 70: (t^{-1} +t) Y_{1,10}Y_{2,7}Y^{-1}_{2,9}Y^{-1}_{2,11}Y_{4,6}

Printed spectral shifts are those of the head Y_{i,1}.  ``f4_errata.txt``
records two transcription slips of the printed list; ``load_appendix``
applies them unless asked for the raw text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .laurent import LaurentPoly, parse_tpoly
from .monomial import Monomial, format_monomial, parse_monomial

#: Shift of the printed heads relative to Y_{i,0}.
APPENDIX_SHIFT = 1


class FixtureError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class FixtureEntry:
    rep: int
    index: int
    coeff: LaurentPoly
    monomial: Monomial

    def line(self) -> str:
        return f"Monomial {self.index}: {self.coeff.format('appendix')} {format_monomial(self.monomial)}"


_SECTION = re.compile(r"^\[rep (\d+)\]$")
_ENTRY = re.compile(r"^Monomial (\d+): (\([^)]*\)|\S+) (\S+)$")


def parse_fixture(text: str) -> list[FixtureEntry]:
    rep = None
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _SECTION.match(line)
        if m:
            rep = int(m.group(1))
            continue
        m = _ENTRY.match(line)
        if not m:
            raise FixtureError(n, f"expected '[rep N]' or 'Monomial K: coeff monomial', got {line!r}")
        if rep is None:
            raise FixtureError(n, "entry before any [rep N] section")
        try:
            coeff = parse_tpoly(m.group(2))
            mono = parse_monomial(m.group(3))
        except ValueError as exc:
            raise FixtureError(n, str(exc)) from None
        out.append(FixtureEntry(rep, int(m.group(1)), coeff, mono))
    return out


def emit_fixture(entries) -> str:
    lines = []
    rep = None
    for e in entries:
        if e.rep != rep:
            rep = e.rep
            lines.append(f"[rep {rep}]")
        lines.append(e.line())
    return "\n".join(lines) + "\n" if lines else ""


def _data(name: str) -> str:
    return resources.files("qtchar").joinpath("data", name).read_text(encoding="utf-8")


def appendix_text() -> str:
    return _data("f4_appendix.txt")


@dataclass(frozen=True)
class Erratum:
    rep: int
    index: int
    printed: Monomial
    corrected: Monomial | None  # None: the printed line is dropped


_DROP = re.compile(r"^drop Monomial (\d+): (\S+)$")
_REPLACE = re.compile(r"^replace Monomial (\d+): (\S+) => (\S+)$")


def load_errata() -> list[Erratum]:
    rep = None
    out = []
    for n, line in enumerate(_data("f4_errata.txt").splitlines(), 1):
        if not line.strip():
            continue
        m = _SECTION.match(line)
        if m:
            rep = int(m.group(1))
            continue
        m = _DROP.match(line)
        if m:
            out.append(Erratum(rep, int(m.group(1)), parse_monomial(m.group(2)), None))
            continue
        m = _REPLACE.match(line)
        if m:
            out.append(Erratum(rep, int(m.group(1)), parse_monomial(m.group(2)),
                               parse_monomial(m.group(3))))
            continue
        raise FixtureError(n, f"bad errata line {line!r}")
    return out


def apply_errata(entries: list[FixtureEntry], errata: list[Erratum]) -> list[FixtureEntry]:
    out = []
    for e in entries:
        hit = [x for x in errata if (x.rep, x.index, x.printed) == (e.rep, e.index, e.monomial)]
        if not hit:
            out.append(e)
        elif hit[0].corrected is not None:
            out.append(FixtureEntry(e.rep, e.index, e.coeff, hit[0].corrected))
    return out


def load_appendix(corrected: bool = True) -> dict[int, list[FixtureEntry]]:
    entries = parse_fixture(appendix_text())
    if corrected:
        entries = apply_errata(entries, load_errata())
    out: dict[int, list[FixtureEntry]] = {}
    for e in entries:
        out.setdefault(e.rep, []).append(e)
    return out


def load_dimensions() -> dict[int, tuple[int, int]]:
    """node -> (dimension, number of monomials)."""
    out = {}
    for line in _data("f4_dimensions.txt").splitlines():
        if line.strip() and not line.startswith("#"):
            node, dim, count = map(int, line.split())
            out[node] = (dim, count)
    return out
