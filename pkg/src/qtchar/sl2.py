"""Single-node calculus: 2-segments, string characters and F_i(m)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .cartan import CartanData
from .character import Character
from .monomial import AVector, Monomial, a_inverse_product, is_dominant

Steps = tuple  # sorted tuple of ((node, shift), multiplicity): an A-inverse vector


class NotDominantError(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    """Shifts start, start + step, ..., start + step*(length-1) at one node."""

    node: int
    start: int
    length: int
    step: int
    multiplicity: int = 1

    @property
    def residue(self) -> int:
        return self.start % self.step

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(self.start + self.step * p for p in range(self.length))

    @property
    def top(self) -> int:
        return self.start + self.step * (self.length - 1)

    def sort_key(self):
        return (self.residue, self.start, self.length)


def special_position(a: Segment, b: Segment) -> bool:
    """Union is a 2-segment properly containing both."""
    if a.node != b.node or a.step != b.step or a.residue != b.residue:
        return False
    sa, sb = set(a.shifts), set(b.shifts)
    if sa <= sb or sb <= sa:
        return False
    # the union is a progression iff the two ranges overlap or touch
    return a.start <= b.top + a.step and b.start <= a.top + a.step


def segment_decompose(i: int, shifts: Mapping[int, int], r: int = 1) -> list[Segment]:
    """Unique decomposition of a shift multiset into pairwise non-special 2-segments.

    ``r`` is r_i, so that the step is 2r_i.  Greedy per residue class: start at
    the smallest remaining shift, extend the chain as far as possible, remove it.
    """
    step = 2 * r
    remaining = {l: e for l, e in shifts.items() if e}
    if any(e < 0 for e in remaining.values()):
        raise ValueError("segment_decompose expects positive multiplicities")
    chains: list[tuple[int, int]] = []
    while remaining:
        s = min(remaining)
        k = 1
        while s + step * k in remaining:
            k += 1
        for p in range(k):
            l = s + step * p
            remaining[l] -= 1
            if not remaining[l]:
                del remaining[l]
        chains.append((s, k))
    counts: dict[tuple[int, int], int] = {}
    for c in chains:
        counts[c] = counts.get(c, 0) + 1
    segs = [Segment(i, s, k, step, mu) for (s, k), mu in counts.items()]
    return sorted(segs, key=Segment.sort_key)


def _string_steps(i: int, seg: Segment, r: int) -> list[Steps]:
    """A-inverse vectors of the k+2 string terms, head first."""
    out: list[Steps] = [()]
    acc: list = []
    for l in reversed(seg.shifts):
        acc.append(((i, l + r), 1))
        out.append(tuple(sorted(acc)))
    return out


def string_character(cd: CartanData, i: int, seg: Segment) -> Character:
    """The (k+2)-term string character of a multiplicity-one segment."""
    if seg.multiplicity != 1:
        raise ValueError("string_character needs a multiplicity-one segment")
    r = cd.r(i)
    head = Monomial({(i, l): 1 for l in seg.shifts})
    terms = {}
    vs = {}
    for steps in _string_steps(i, seg, r):
        v = AVector.from_dict(dict(steps))
        m = head * a_inverse_product(cd, v)
        terms[m] = 1
        vs[m] = v
    return Character(terms, head=head, cartan=cd, meta={"v": vs})


def _slice_key(m: Monomial, i: int) -> tuple:
    return tuple(sorted((l, e) for (j, l), e in m.items() if j == i and e > 0))


def _vplus(a: Steps, b: Steps, k: int = 1) -> Steps:
    d = dict(a)
    for key, e in b:
        x = d.get(key, 0) + k * e
        if x:
            d[key] = x
        else:
            d.pop(key, None)
    return tuple(sorted(d.items()))


def _node_part(slice_key: tuple, steps: Steps, r: int) -> dict[int, int]:
    """Node-i exponents of m * prod A^{-steps}: only the legs l +- r_i land on node i."""
    part = dict(slice_key)
    for (_, l), e in steps:
        for s in (l - r, l + r):
            x = part.get(s, 0) - e
            if x:
                part[s] = x
            else:
                part.pop(s, None)
    return part


@lru_cache(maxsize=65536)
def li_expansion(cd: CartanData, i: int, slice_key: tuple) -> tuple[tuple[Steps, int], ...]:
    """L_i of a monomial with positive i-part ``slice_key``: the product of its string characters.

    Entries are (A-inverse vector relative to m, coefficient).  The expansion
    depends on the i-slice only since the non-i part multiplies through.
    """
    r = cd.r(i)
    cur: dict[Steps, int] = {(): 1}
    for seg in segment_decompose(i, dict(slice_key), r):
        opts = _string_steps(i, Segment(i, seg.start, seg.length, seg.step), r)
        for _ in range(seg.multiplicity):
            new: dict[Steps, int] = {}
            for k, c in cur.items():
                for o in opts:
                    nk = _vplus(k, o)
                    new[nk] = new.get(nk, 0) + c
            cur = new
    return tuple(sorted(cur.items()))


@lru_cache(maxsize=65536)
def fi_expansion(cd: CartanData, i: int, slice_key: tuple) -> tuple[tuple[Steps, int], ...]:
    """F_i: the i-kernel element whose only i-dominant monomial is m.

    Starts from L_i(m) and removes the other i-dominant monomials, highest first,
    by subtracting their own F_i.  It coincides with L_i(m) when m is the only
    i-dominant monomial of L_i(m).
    """
    r = cd.r(i)
    cur = dict(li_expansion(cd, i, slice_key))

    def extra():
        return [s for s, c in cur.items()
                if s and c and all(x >= 0 for x in _node_part(slice_key, s, r).values())]

    todo = extra()
    while todo:
        s = min(todo, key=lambda k: (sum(e for _, e in k), k))
        c = cur[s]
        sub_slice = tuple(sorted(_node_part(slice_key, s, r).items()))
        for k, x in fi_expansion(cd, i, sub_slice):
            nk = _vplus(s, k)
            y = cur.get(nk, 0) - c * x
            if y:
                cur[nk] = y
            else:
                cur.pop(nk, None)
        todo = extra()
    return tuple(sorted(cur.items()))


def _expand(cd: CartanData, i: int, m: Monomial, expansion) -> Character:
    terms = {}
    vs = {}
    for steps, c in expansion(cd, i, _slice_key(m, i)):
        v = AVector.from_dict(dict(steps))
        y = m * a_inverse_product(cd, v)
        terms[y] = c
        vs[y] = v
    return Character(terms, head=m, cartan=cd, meta={"v": vs})


def L_i(cd: CartanData, i: int, m: Monomial) -> Character:
    """Simple sl2 character at node i: m^{(I-{i})} times the string product."""
    if not is_dominant(m, [i]):
        raise NotDominantError(f"{m} is not {i}-dominant")
    return _expand(cd, i, m, li_expansion)


def F_i(cd: CartanData, i: int, m: Monomial) -> Character:
    """The kernel element with m as its unique i-dominant monomial."""
    if not is_dominant(m, [i]):
        raise NotDominantError(f"{m} is not {i}-dominant")
    ch = _expand(cd, i, m, fi_expansion)
    others = [y for y in ch.monomials() if y != m and is_dominant(y, [i])]
    if others:
        raise AssertionError(f"F_{i}({m}) has further {i}-dominant terms: {others[:3]}")
    return ch


def L_i_monomials(cd: CartanData, i: int, m: Monomial) -> set[Monomial]:
    return set(L_i(cd, i, m).monomials())
