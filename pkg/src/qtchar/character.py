"""Finite formal sums of monomials with integer or t-Laurent coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .cartan import CartanData
from .laurent import LaurentPoly, TPoly
from .monomial import AVector, Monomial, dominance_compare, is_dominant

Coeff = Union[int, LaurentPoly]


class CoefficientModeError(TypeError):
    """Raised when integer-mode and t-mode characters are combined."""


class IncomparableTerm(ValueError):
    def __init__(self, monomial: Monomial, head: Monomial):
        super().__init__(f"term {monomial} is not below head {head}")
        self.monomial = monomial


def _mode_of(c) -> str:
    if isinstance(c, LaurentPoly):
        return "t"
    if isinstance(c, int) and not isinstance(c, bool):
        return "int"
    raise TypeError(f"unsupported coefficient {c!r}")


class Character:
    """An immutable map Monomial -> coefficient.

    ``mode`` is ``"int"`` or ``"t"``; ``head`` is the originating dominant
    monomial when the character came out of an algorithm, and ``truncated``
    marks windowed (affine) runs.  ``meta`` holds free-form run metadata.
    """

    __slots__ = ("_terms", "mode", "head", "truncated", "meta", "cartan")

    def __init__(self, terms: Mapping[Monomial, Coeff] | Iterable[tuple[Monomial, Coeff]] = (),
                 head: Monomial | None = None, *, mode: str | None = None,
                 truncated: bool = False, meta: dict | None = None,
                 cartan: CartanData | None = None):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coeff] = {}
        for m, c in pairs:
            md = _mode_of(c)
            if mode is None:
                mode = md
            elif md != mode:
                raise CoefficientModeError(f"{md} coefficient in a {mode}-mode character")
            acc[m] = acc[m] + c if m in acc else c
        self._terms = {m: c for m, c in acc.items() if c}
        self.mode = mode or "int"
        self.head = head
        self.truncated = truncated
        self.meta = dict(meta or {})
        self.cartan = cartan

    @classmethod
    def _trusted(cls, terms: dict, mode: str, **kw) -> "Character":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.mode = mode
        obj.head = kw.get("head")
        obj.truncated = kw.get("truncated", False)
        obj.meta = dict(kw.get("meta") or {})
        obj.cartan = kw.get("cartan")
        return obj

    @classmethod
    def unit(cls, mode: str = "int") -> "Character":
        one = 1 if mode == "int" else TPoly.const(1)
        return cls._trusted({Monomial.one(): one}, mode, head=Monomial.one())

    @classmethod
    def zero(cls, mode: str = "int") -> "Character":
        return cls._trusted({}, mode)

    @classmethod
    def single(cls, m: Monomial, c: Coeff = 1) -> "Character":
        return cls({m: c}, head=m)

    # -- access ----------------------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.monomials())

    def __contains__(self, m):
        return m in self._terms

    def __getitem__(self, m: Monomial) -> Coeff:
        c = self._terms.get(m)
        if c is None:
            return 0 if self.mode == "int" else TPoly({})
        return c

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=Monomial.sort_key)

    def items(self) -> list[tuple[Monomial, Coeff]]:
        return [(m, self._terms[m]) for m in self.monomials()]

    def as_dict(self) -> dict[Monomial, Coeff]:
        return dict(self._terms)

    def coefficient_sum(self):
        """Sum of coefficients (evaluated at t = 1 in t-mode)."""
        if self.mode == "int":
            return sum(self._terms.values())
        return sum(c.at_one() for c in self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = " + ".join(f"{c}*{m}" for m, c in self.items()[:6])
        more = "" if len(self) <= 6 else f" + ... ({len(self)} terms)"
        return f"Character[{self.mode}]({body}{more})"

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Character"):
        if not isinstance(other, Character):
            raise TypeError("expected a Character")
        if self._terms and other._terms and self.mode != other.mode:
            raise CoefficientModeError(f"cannot combine {self.mode} and {other.mode} characters")

    def _mode_with(self, other: "Character") -> str:
        if not self._terms:
            return other.mode
        return self.mode

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            x = acc[m] + c if m in acc else c
            if x:
                acc[m] = x
            else:
                acc.pop(m, None)
        return Character._trusted(acc, self._mode_with(other))

    def __neg__(self) -> "Character":
        return Character._trusted({m: -c for m, c in self._terms.items()}, self.mode)

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, k: Coeff) -> "Character":
        if isinstance(k, LaurentPoly) and self.mode == "int" and self._terms:
            raise CoefficientModeError("scaling an integer character by a Laurent polynomial")
        acc = {m: c * k for m, c in self._terms.items()}
        return Character._trusted({m: c for m, c in acc.items() if c}, self.mode)

    def __mul__(self, other: "Character") -> "Character":
        """Commutative convolution on exponent maps."""
        self._check(other)
        acc: dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                x = acc[m] + c1 * c2 if m in acc else c1 * c2
                if x:
                    acc[m] = x
                else:
                    acc.pop(m, None)
        head = self.head * other.head if self.head is not None and other.head is not None else None
        return Character._trusted(acc, self._mode_with(other), head=head,
                                  truncated=self.truncated or other.truncated)

    def __pow__(self, k: int) -> "Character":
        out = Character.unit(self.mode)
        for _ in range(k):
            out = out * self
        return out

    def translate(self, c: int) -> "Character":
        """Shift every spectral parameter by c."""
        return Character._trusted({m.translate(c): x for m, x in self._terms.items()}, self.mode,
                                  head=None if self.head is None else self.head.translate(c),
                                  truncated=self.truncated, cartan=self.cartan)

    def to_t(self) -> "Character":
        """Injection of an integer-mode character into t-mode."""
        if self.mode == "t":
            return self
        return Character._trusted({m: TPoly.const(c) for m, c in self._terms.items()}, "t",
                                  head=self.head, truncated=self.truncated, cartan=self.cartan)

    def with_head(self, head: Monomial | None) -> "Character":
        return Character._trusted(dict(self._terms), self.mode, head=head, truncated=self.truncated,
                                  meta=self.meta, cartan=self.cartan)


def height_slices(cd: CartanData, ch: Character, head: Monomial | None = None):
    """[(h, [(m, c), ...]), ...] grouped by the A-degree of m below head, heights ascending."""
    head = head if head is not None else ch.head
    if head is None:
        raise ValueError("height_slices needs a head monomial")
    by_h: dict[int, list] = {}
    for m, c in ch.items():
        v = dominance_compare(cd, m, head)
        if v is None:
            raise IncomparableTerm(m, head)
        by_h.setdefault(v.height(), []).append((m, c))
    return sorted(by_h.items())


def j_dominant_terms(ch: Character, J) -> list[tuple[Monomial, Coeff]]:
    return [(m, c) for m, c in ch.items() if is_dominant(m, J)]


def v_vectors(cd: CartanData, ch: Character, head: Monomial | None = None) -> dict[Monomial, AVector]:
    head = head if head is not None else ch.head
    out = {}
    for m in ch.monomials():
        v = dominance_compare(cd, m, head)
        if v is None:
            raise IncomparableTerm(m, head)
        out[m] = v
    return out
