"""Laurent monomials in the variables Y_{i,l} and their A-inverse bookkeeping.

Spectral parameters are integer shifts ``l`` (``Y_{i,l}`` stands for
``Y_{i,q^l}``).  Coweight factors are not represented.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cartan import CartanData

Key = tuple[int, int]


class _Sparse:
    """Immutable sparse map (node, shift) -> nonzero integer, sorted by key."""

    __slots__ = ("_items", "_hash")

    def __init__(self, data: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        if isinstance(data, Mapping):
            items = data.items()
        else:
            acc: dict[Key, int] = {}
            for k, e in data:
                acc[k] = acc.get(k, 0) + e
            items = acc.items()
        self._items = tuple(sorted((k, e) for k, e in items if e))
        self._hash = None

    @classmethod
    def _raw(cls, items: tuple):
        obj = cls.__new__(cls)
        obj._items = items
        obj._hash = None
        return obj

    @classmethod
    def from_dict(cls, d: Mapping[Key, int]):
        """Trusted constructor: ``d`` holds no zero values."""
        return cls._raw(tuple(sorted(d.items())))

    def items(self):
        return self._items

    def as_dict(self) -> dict[Key, int]:
        return dict(self._items)

    def __getitem__(self, key: Key) -> int:
        for k, e in self._items:
            if k == key:
                return e
        return 0

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._items))
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def sort_key(self):
        return self._items

    def nodes(self) -> set[int]:
        return {k[0] for k, _ in self._items}

    def shifts(self) -> set[int]:
        return {k[1] for k, _ in self._items}

    def _combine(self, other, sign: int = 1):
        d = dict(self._items)
        for k, e in other._items:
            x = d.get(k, 0) + sign * e
            if x:
                d[k] = x
            else:
                d.pop(k, None)
        return d


class Monomial(_Sparse):
    """A Laurent monomial prod Y_{i,l}^{u_{i,l}}."""

    __slots__ = ()

    @classmethod
    def one(cls) -> "Monomial":
        return cls._raw(())

    @classmethod
    def Y(cls, i: int, l: int, e: int = 1) -> "Monomial":
        return cls._raw((((i, l), e),)) if e else cls.one()

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.from_dict(self._combine(other, 1))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial.from_dict(self._combine(other, -1))

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return Monomial.one()
        return Monomial._raw(tuple((key, e * k) for key, e in self._items))

    def inverse(self) -> "Monomial":
        return self ** -1

    def exponent(self, i: int, l: int) -> int:
        return self[(i, l)]

    def degree(self) -> int:
        """u(m): sum of all exponents."""
        return sum(e for _, e in self._items)

    def restrict(self, nodes) -> "Monomial":
        keep = set(nodes)
        return Monomial._raw(tuple((k, e) for k, e in self._items if k[0] in keep))

    def node_slice(self, i: int) -> dict[int, int]:
        return {k[1]: e for k, e in self._items if k[0] == i}

    def translate(self, c: int) -> "Monomial":
        return Monomial._raw(tuple(((i, l + c), e) for (i, l), e in self._items))

    def is_one(self) -> bool:
        return not self._items

    def format(self) -> str:
        return format_monomial(self)

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"


class AVector(_Sparse):
    """Exponents v_{i,l} >= 0 of a product of A_{i,l}^{-1}."""

    __slots__ = ()

    def __init__(self, data=()):
        super().__init__(data)
        if any(e < 0 for _, e in self._items):
            raise ValueError("AVector entries must be nonnegative")

    @classmethod
    def zero(cls) -> "AVector":
        return cls._raw(())

    def __add__(self, other: "AVector") -> "AVector":
        return AVector.from_dict(self._combine(other, 1))

    def __sub__(self, other: "AVector") -> "AVector":
        return AVector(self._combine(other, -1))

    def height(self) -> int:
        return sum(e for _, e in self._items)

    def node_heights(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), e in self._items:
            out[i] = out.get(i, 0) + e
        return out

    def translate(self, c: int) -> "AVector":
        return AVector._raw(tuple(((i, l + c), e) for (i, l), e in self._items))

    def __repr__(self):
        return "AVector({" + ", ".join(f"{k}: {e}" for k, e in self._items) + "})"


@dataclass(frozen=True)
class TrackedMonomial:
    """y = head * prod A_{i,l}^{-v_{i,l}}."""

    head: Monomial
    y: Monomial
    v: AVector

    @classmethod
    def start(cls, head: Monomial) -> "TrackedMonomial":
        return cls(head, head, AVector.zero())

    def height(self) -> int:
        return self.v.height()


# -- A-monomials -------------------------------------------------------------

_A_CACHE: dict[tuple, dict[Key, int]] = {}


def a_exponents(cd: CartanData, i: int, l: int) -> dict[Key, int]:
    """Exponent dict of A_{i,l}; shared, do not mutate."""
    key = (cd, i, l)
    d = _A_CACHE.get(key)
    if d is None:
        r = cd.r(i)
        d = {(i, l - r): 1, (i, l + r): 1}
        for j, c in cd.neighbors(i):
            for s in range(c + 1, -c, 2):
                d[(j, l + s)] = d.get((j, l + s), 0) - 1
        d = {k: e for k, e in d.items() if e}
        if len(_A_CACHE) > 200_000:
            _A_CACHE.clear()
        _A_CACHE[key] = d
    return d


def a_monomial(cd: CartanData, i: int, l: int) -> Monomial:
    """A_{i,l} = Y_{i,l-r_i} Y_{i,l+r_i} prod_{C_ji<0} prod_s Y_{j,l+s}^{-1}."""
    return Monomial.from_dict(a_exponents(cd, i, l))


def a_inverse_product(cd: CartanData, v: AVector) -> Monomial:
    d: dict[Key, int] = {}
    for (i, l), k in v.items():
        for key, e in a_exponents(cd, i, l).items():
            x = d.get(key, 0) - k * e
            if x:
                d[key] = x
            else:
                d.pop(key, None)
    return Monomial.from_dict(d)


def expand(cd: CartanData, head: Monomial, v: AVector) -> Monomial:
    return head * a_inverse_product(cd, v)


def apply_a_inverse(cd: CartanData, tm: TrackedMonomial, i: int, l: int, k: int = 1) -> TrackedMonomial:
    """Divide y by A_{i,l}^k and record it in v (k may be negative to undo)."""
    d = tm.y.as_dict()
    for key, e in a_exponents(cd, i, l).items():
        x = d.get(key, 0) - k * e
        if x:
            d[key] = x
        else:
            d.pop(key, None)
    step = AVector({(i, l): abs(k)})
    v = tm.v + step if k > 0 else tm.v - step
    return TrackedMonomial(tm.head, Monomial.from_dict(d), v)


# -- exponent statistics -----------------------------------------------------

@dataclass(frozen=True)
class UStats:
    total: int       # u_J(m)
    positive: int    # u_J^+(m) >= 0
    negative: int    # u_J^-(m) >= 0, so that total = positive - negative
    table: dict


def u_stats(m: Monomial, J=None) -> UStats:
    keep = None if J is None else set(J)
    pos = neg = 0
    table: dict[int, dict[int, int]] = {}
    for (i, l), e in m.items():
        if keep is not None and i not in keep:
            continue
        table.setdefault(i, {})[l] = e
        if e > 0:
            pos += e
        else:
            neg -= e
    return UStats(pos - neg, pos, neg, table)


def truncate(m: Monomial, J) -> Monomial:
    """m^{(J)}: keep only the factors at nodes in J."""
    return m.restrict(J)


def is_dominant(m: Monomial, J=None) -> bool:
    if J is None:
        return all(e >= 0 for _, e in m.items())
    keep = set(J)
    return all(e >= 0 for (i, _), e in m.items() if i in keep)


def is_right_negative(m: Monomial):
    """True/False; ``None`` for the unit monomial, which is neither."""
    if m.is_one():
        return None
    top = max(l for (_, l), _ in m.items())
    return all(e <= 0 for (_, l), e in m.items() if l == top)


def dominance_compare(cd: CartanData, m_lo: Monomial, m_hi: Monomial) -> AVector | None:
    """The v with m_lo = m_hi * prod A^{-v}, or None when m_lo is not <= m_hi.

    Peels the quotient from its top shift downward: at the top shift only the
    upper leg Y_{i,l+r_i} of A_{i,l}^{-1} can occur.
    """
    for i in cd.nodes:
        for _, c in cd.neighbors(i):
            if -c > cd.r(i):
                raise NotImplementedError("top-leg peeling needs -C_ji <= r_i")
    q = (m_lo / m_hi).as_dict()
    if not q:
        return AVector.zero()
    floor = min(l for _, l in q)
    v: dict[Key, int] = {}
    while q:
        top = max(l for _, l in q)
        layer = [(i, e) for (i, l), e in q.items() if l == top]
        for i, e in layer:
            if e > 0:
                return None
            base = top - cd.r(i)
            if base - cd.r(i) < floor:
                return None
            v[(i, base)] = v.get((i, base), 0) - e
            for key, x in a_exponents(cd, i, base).items():
                y = q.get(key, 0) + (-e) * x
                if y:
                    q[key] = y
                else:
                    q.pop(key, None)
    return AVector.from_dict(v)


# -- text forms --------------------------------------------------------------

def _exp_tag(e: int) -> str:
    if e == 1:
        return ""
    if 0 < e <= 9:
        return f"^{e}"
    return f"^{{{e}}}"


def format_monomial(m: Monomial) -> str:
    """Appendix style, e.g. ``Y_{1,10}Y^{-1}_{2,9}Y^2_{2,8}``; the unit is ``1``."""
    if m.is_one():
        return "1"
    return "".join(f"Y{_exp_tag(e)}_{{{i},{l}}}" for (i, l), e in m.items())


_FACTOR = re.compile(r"Y(?:\^(?:\{(-?\d+)\}|(\d)))?_\{(-?\d+),(-?\d+)\}")


def parse_monomial(text: str) -> Monomial:
    s = text.strip()
    if s == "1":
        return Monomial.one()
    acc: list[tuple[Key, int]] = []
    pos = 0
    for m in _FACTOR.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"unexpected text {s[pos:m.start()]!r} in monomial {text!r}")
        e = int(m.group(1)) if m.group(1) is not None else int(m.group(2)) if m.group(2) else 1
        if e == 0:
            raise ValueError(f"zero exponent in monomial {text!r}")
        acc.append(((int(m.group(3)), int(m.group(4))), e))
        pos = m.end()
    if s[pos:].strip() or not acc:
        raise ValueError(f"cannot parse monomial {text!r}")
    return Monomial(acc)


def format_machine(m: Monomial) -> str:
    """``Y[1,0] * Y[2,3]^-1``; the unit is ``1``."""
    if m.is_one():
        return "1"
    return " * ".join(f"Y[{i},{l}]" + (f"^{e}" if e != 1 else "") for (i, l), e in m.items())


_MACHINE = re.compile(r"^Y\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^\s*(-?\d+))?$")


def parse_machine(text: str) -> Monomial:
    s = text.strip()
    if s == "1":
        return Monomial.one()
    acc = []
    for part in s.split("*"):
        m = _MACHINE.match(part.strip())
        if not m:
            raise ValueError(f"bad factor {part.strip()!r}; expected Y[i,l] or Y[i,l]^e")
        e = int(m.group(3) or 1)
        if e == 0:
            raise ValueError(f"zero exponent in factor {part.strip()!r}")
        acc.append(((int(m.group(1)), int(m.group(2))), e))
    return Monomial(acc)
