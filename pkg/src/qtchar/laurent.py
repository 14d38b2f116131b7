"""Sparse Laurent polynomials in one variable with integer coefficients.

Used for the central parameter ``t`` of q,t-characters (:class:`TPoly`) and for
the entries of the quantized Cartan matrix in ``z``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


def _exp_str(var: str, e: int) -> str:
    if e == 1:
        return var
    if 0 <= e <= 9:
        return f"{var}^{e}"
    return f"{var}^{{{e}}}"


class LaurentPoly:
    """Immutable sparse map exponent -> nonzero integer."""

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "t"):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self.var = var
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple, var: str = "t") -> "LaurentPoly":
        """Trusted constructor: sorted (exp, coef) pairs with nonzero coefficients."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.var = var
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def const(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "t") -> "LaurentPoly":
        return cls({e: c}, var)

    @classmethod
    def quantum_integer(cls, n: int, var: str = "z") -> "LaurentPoly":
        """[n]_z = (z^n - z^-n)/(z - z^-1); odd in n."""
        if n == 0:
            return cls({}, var)
        sign = 1 if n > 0 else -1
        k = abs(n)
        return cls({e: sign for e in range(-(k - 1), k, 2)}, var)

    # mapping-like access
    def items(self):
        return self._terms

    def __iter__(self):
        return iter(e for e, _ in self._terms)

    def __getitem__(self, e: int) -> int:
        for x, c in self._terms:
            if x == e:
                return c
        return 0

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPoly(list(self._terms) + list(other._terms), self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for a, x in self._terms:
            for b, y in other._terms:
                acc[a + b] = acc.get(a + b, 0) + x * y
        return LaurentPoly(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = LaurentPoly.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by var^d."""
        if not d:
            return self
        return LaurentPoly({e + d: c for e, c in self._terms}, self.var)

    def bar(self) -> "LaurentPoly":
        """The involution var -> var^{-1}."""
        return LaurentPoly({-e: c for e, c in self._terms}, self.var)

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        return self._terms[0][0]

    def max_exp(self) -> int:
        return self._terms[-1][0]

    def nonnegative(self) -> bool:
        return all(c > 0 for _, c in self._terms)

    # text forms
    def _term_strings(self):
        for e, c in self._terms:
            if e == 0:
                yield str(c)
                continue
            body = _exp_str(self.var, e)
            if c == 1:
                yield body
            elif c == -1:
                yield "-" + body
            else:
                yield f"{c}{body}"

    def format(self, style: str = "canonical") -> str:
        """``canonical``: ``(t^{-1}+t)``, ``t^2``, ``3``; ``appendix``: ``(t^{-1} +t)``."""
        parts = list(self._term_strings())
        if not parts:
            return "0"
        if len(parts) == 1:
            return parts[0]
        sep = " +" if style == "appendix" else "+"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += (" " if style == "appendix" else "") + p
            else:
                out += sep + p
        return f"({out})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r}, var={self.var!r})"


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(?:([a-z])(?:\^(?:\{(-?\d+)\}|(\d)))?)?\s*")


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.format` (either style)."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial")
    acc: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, digits, v, brace, single = m.groups()
        if not digits and not v:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        if v is None:
            e = 0
        elif brace is not None:
            e = int(brace)
        elif single is not None:
            e = int(single)
        else:
            e = 1
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(acc, var)


#: Laurent polynomial in the central variable ``t``.
TPoly = LaurentPoly


def parse_tpoly(text: str) -> LaurentPoly:
    return parse_laurent(text, "t")


def as_tpoly(p) -> LaurentPoly:
    if isinstance(p, LaurentPoly):
        return p
    return LaurentPoly.const(int(p))
