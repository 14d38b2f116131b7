"""Text and JSON forms of characters.

Text: one ``coeff monomial`` line per term in canonical monomial order, e.g.
``1 Y_{1,0}`` or ``(t^{-1}+t) Y_{2,7}Y^{-1}_{2,9}``.  Truncated characters
start with a ``# truncated: ...`` banner; other ``#`` lines are comments.

JSON: an object with fields in this fixed order::

    {"head": [[i, l, e], ...] | null,
     "truncated": bool,
     "max_height": int | null,
     "terms": [{"monomial": [[i, l, e], ...], "coeff": int | [[t_exp, c], ...]}, ...]}

q,t-characters add a ``"v"`` field ([[i, l, v_il], ...]) to every term record.
"""

from __future__ import annotations

import json

from .character import Character
from .laurent import LaurentPoly, parse_tpoly
from .monomial import Monomial, format_monomial, parse_monomial
from .qt import TCharacter


def _coeff_text(c) -> str:
    return c.format() if isinstance(c, LaurentPoly) else str(c)


def _mono_json(m: Monomial) -> list:
    return [[i, l, e] for (i, l), e in m.items()]


def _coeff_json(c):
    return [[e, x] for e, x in c.items()] if isinstance(c, LaurentPoly) else c


def _banner(obj) -> list[str]:
    if not obj.truncated:
        return []
    h = obj.meta.get("max_height")
    return [f"# truncated: terms of height > {h} omitted"]


def emit_character(ch, fmt: str = "text") -> bytes:
    """Deterministic serialization of a Character or TCharacter."""
    if fmt == "text":
        lines = _banner(ch)
        if isinstance(ch, TCharacter):
            lines += [f"{_coeff_text(p)} {format_monomial(ch.y(v))}" for v, p in ch.items()]
        else:
            lines += [f"{_coeff_text(c)} {format_monomial(m)}" for m, c in ch.items()]
        return ("\n".join(lines) + "\n").encode() if lines else b""
    if fmt == "json":
        if isinstance(ch, TCharacter):
            terms = [{"monomial": _mono_json(ch.y(v)), "coeff": _coeff_json(p),
                      "v": [[i, l, e] for (i, l), e in v.items()]} for v, p in ch.items()]
        else:
            terms = [{"monomial": _mono_json(m), "coeff": _coeff_json(c)} for m, c in ch.items()]
        doc = {
            "head": None if ch.head is None else _mono_json(ch.head),
            "truncated": bool(ch.truncated),
            "max_height": ch.meta.get("max_height"),
            "terms": terms,
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}; expected text or json")


def parse_character(data: bytes | str) -> Character:
    """Read back the text or JSON form (q,t-records are read by y-monomial)."""
    text = data.decode() if isinstance(data, bytes) else data
    s = text.lstrip()
    if s.startswith("{"):
        doc = json.loads(s)
        terms = {}
        for rec in doc["terms"]:
            m = Monomial([((i, l), e) for i, l, e in rec["monomial"]])
            c = rec["coeff"]
            c = LaurentPoly({e: x for e, x in c}) if isinstance(c, list) else int(c)
            terms[m] = terms[m] + c if m in terms else c
        head = None if doc.get("head") is None else Monomial([((i, l), e) for i, l, e in doc["head"]])
        return Character(terms, head=head, truncated=doc.get("truncated", False),
                         meta={"max_height": doc.get("max_height")})
    terms = {}
    truncated = False
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            truncated = truncated or line.startswith("# truncated")
            continue
        coeff, _, mono = line.rpartition(" ")
        if not coeff:
            raise ValueError(f"line {n}: expected 'coeff monomial', got {line!r}")
        c = int(coeff) if coeff.lstrip("-").isdigit() else parse_tpoly(coeff)
        m = parse_monomial(mono)
        terms[m] = terms[m] + c if m in terms else c
    return Character(terms, truncated=truncated)
