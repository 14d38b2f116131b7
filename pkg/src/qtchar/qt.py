"""The t-deformation layer: the twisted product *_t on (monomial, A-vector) pairs,
the t-deformed algorithm and q,t-characters of standard modules."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .algorithm import (InconsistentAlgorithm, Limits, PreconditionError, run_recursion,
                        slice_key)
from .cartan import CartanData
from .character import Character
from .laurent import LaurentPoly, TPoly
from .monomial import AVector, Monomial, TrackedMonomial, a_exponents, is_dominant
from .sl2 import NotDominantError, _string_steps, segment_decompose

ZERO = TPoly({})
ONE = TPoly.const(1)


def _u_of_v(cd: CartanData, v: Iterable) -> dict:
    """Y-exponents of prod A^{-v}."""
    out: dict = {}
    for (i, l), e in v:
        for key, x in a_exponents(cd, i, l).items():
            y = out.get(key, 0) - e * x
            if y:
                out[key] = y
            else:
                out.pop(key, None)
    return out


def _vsum(a: tuple, b: tuple) -> tuple:
    d = dict(a)
    for key, e in b:
        d[key] = d.get(key, 0) + e
    return tuple(sorted(d.items()))


def _D(cd: CartanData, m: Mapping, v: tuple, uv: Mapping, m2: Mapping, v2: tuple, uv2: Mapping) -> int:
    d = 0
    for (i, l), e in v2:
        key = (i, l + cd.r(i))
        d += (2 * m.get(key, 0) + uv.get(key, 0)) * e
    for (i, l), e in v:
        key = (i, l - cd.r(i))
        d += e * (2 * m2.get(key, 0) + uv2.get(key, 0))
    return d


def star_t_exponent(cd: CartanData, a: tuple[Monomial, AVector], b: tuple[Monomial, AVector]) -> int:
    """The twist D((m, v), (m', v')) of the product (m, v) *_t (m', v')."""
    (m, v), (m2, v2) = a, b
    return _D(cd, m.as_dict(), v.items(), _u_of_v(cd, v.items()),
              m2.as_dict(), v2.items(), _u_of_v(cd, v2.items()))


class TCharacter:
    """A map from pairs (head, v) to t-Laurent coefficients; the head is shared.

    The term with A-vector v stands for y = head * prod A^{-v}.  Terms are keyed
    by v, so distinct v with equal y stay apart until ``specialize_t1``.
    """

    __slots__ = ("cartan", "head", "_terms", "meta", "truncated", "_ys")

    def __init__(self, cd: CartanData, head: Monomial, terms: Mapping[AVector, LaurentPoly],
                 meta: dict | None = None, truncated: bool = False):
        self.cartan = cd
        self.head = head
        self._terms = {v: p for v, p in terms.items() if p}
        self.meta = dict(meta or {})
        self.truncated = truncated
        self._ys: dict | None = None

    @classmethod
    def unit(cls, cd: CartanData) -> "TCharacter":
        return cls(cd, Monomial.one(), {AVector.zero(): ONE})

    @classmethod
    def pair(cls, cd: CartanData, head: Monomial, v: AVector, coeff: LaurentPoly = ONE) -> "TCharacter":
        return cls(cd, head, {v: coeff})

    def __len__(self):
        return len(self._terms)

    def y(self, v: AVector) -> Monomial:
        if self._ys is None:
            self._ys = {}
        m = self._ys.get(v)
        if m is None:
            m = self.head * Monomial.from_dict(_u_of_v(self.cartan, v.items()))
            self._ys[v] = m
        return m

    def items(self) -> list[tuple[AVector, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda kv: (self.y(kv[0]).sort_key(), kv[0].sort_key()))

    def tracked(self) -> list[tuple[TrackedMonomial, LaurentPoly]]:
        return [(TrackedMonomial(self.head, self.y(v), v), p) for v, p in self.items()]

    def coefficient(self, v: AVector) -> LaurentPoly:
        return self._terms.get(v, ZERO)

    def as_dict(self) -> dict[AVector, LaurentPoly]:
        return dict(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TCharacter):
            return NotImplemented
        return self.head == other.head and self._terms == other._terms

    def __repr__(self):
        return f"TCharacter(head={self.head}, {len(self)} terms)"

    def by_monomial(self) -> dict[Monomial, LaurentPoly]:
        """Coefficients summed over pairs with the same y."""
        out: dict[Monomial, LaurentPoly] = {}
        for v, p in self._terms.items():
            m = self.y(v)
            out[m] = out[m] + p if m in out else p
        return {m: p for m, p in out.items() if p}

    def scale(self, p: LaurentPoly) -> "TCharacter":
        return TCharacter(self.cartan, self.head, {v: c * p for v, c in self._terms.items()},
                          truncated=self.truncated)


# -- the twisted product -----------------------------------------------------

_VECTOR_THRESHOLD = 4096


def star_t(A: TCharacter, B: TCharacter) -> TCharacter:
    """Bilinear extension of (m, v) *_t (m', v') = t^D (mm', v + v')."""
    if A.cartan != B.cartan:
        raise ValueError("star_t needs characters over the same Cartan data")
    cd = A.cartan
    if len(A) * len(B) <= _VECTOR_THRESHOLD:
        terms = _star_python(cd, A, B)
    else:
        terms = _star_numpy(cd, A, B)
    return TCharacter(cd, A.head * B.head,
                      {AVector._raw(k): TPoly._raw(p) for k, p in terms.items() if p},
                      truncated=A.truncated or B.truncated)


def _star_python(cd, A: TCharacter, B: TCharacter) -> dict:
    mA, mB = A.head.as_dict(), B.head.as_dict()
    bs = [(v.items(), _u_of_v(cd, v.items()), p.items()) for v, p in B._terms.items()]
    out: dict[tuple, dict] = {}
    for va, pa in A._terms.items():
        ka = va.items()
        ua = _u_of_v(cd, ka)
        for kb, ub, pb in bs:
            d = _D(cd, mA, ka, ua, mB, kb, ub)
            acc = out.setdefault(_vsum(ka, kb), {})
            for e1, c1 in pa.items():
                for e2, c2 in pb:
                    e = e1 + e2 + d
                    acc[e] = acc.get(e, 0) + c1 * c2
    return {k: tuple(sorted((e, c) for e, c in p.items() if c)) for k, p in out.items()}


def _star_numpy(cd, A: TCharacter, B: TCharacter) -> dict:
    mA, mB = A.head.as_dict(), B.head.as_dict()
    va = [v.items() for v in A._terms]
    vb = [v.items() for v in B._terms]
    ua = [_u_of_v(cd, v) for v in va]
    ub = [_u_of_v(cd, v) for v in vb]

    def shifted(key, s):
        return (key[0], key[1] + s * cd.r(key[0]))

    colsV = sorted({k for v in vb for k, _ in v})
    colsW = sorted({shifted(k, -1) for v in va for k, _ in v})
    iV = {k: n for n, k in enumerate(colsV)}
    iW = {k: n for n, k in enumerate(colsW)}
    X = np.zeros((len(va), len(colsV)), dtype=np.int64)
    W = np.zeros((len(va), len(colsW)), dtype=np.int64)
    for a, (v, u) in enumerate(zip(va, ua)):
        for k, n in iV.items():
            up = shifted(k, 1)
            X[a, n] = 2 * mA.get(up, 0) + u.get(up, 0)
        for k, e in v:
            W[a, iW[shifted(k, -1)]] = e
    V = np.zeros((len(vb), len(colsV)), dtype=np.int64)
    Z = np.zeros((len(vb), len(colsW)), dtype=np.int64)
    for b, (v, u) in enumerate(zip(vb, ub)):
        for k, e in v:
            V[b, iV[k]] = e
        for k, n in iW.items():
            Z[b, n] = 2 * mB.get(k, 0) + u.get(k, 0)
    D = X @ V.T + W @ Z.T

    # pack the summed A-vectors into int64 words, fields wide enough for the sum
    cols = sorted({k for v in va for k, _ in v} | set(colsV))
    ic = {k: n for n, k in enumerate(cols)}
    DA = np.zeros((len(va), max(len(cols), 1)), dtype=np.int64)
    DB = np.zeros((len(vb), max(len(cols), 1)), dtype=np.int64)
    for a, v in enumerate(va):
        for k, e in v:
            DA[a, ic[k]] = e
    for b, v in enumerate(vb):
        for k, e in v:
            DB[b, ic[k]] = e
    bits = max(1, int(DA.max(initial=0) + DB.max(initial=0)).bit_length())
    per = max(1, 62 // bits)
    nw = -(-DA.shape[1] // per)
    shifts = (np.arange(DA.shape[1]) % per) * bits
    word = np.arange(DA.shape[1]) // per
    PA = np.zeros((len(va), nw), dtype=np.int64)
    PB = np.zeros((len(vb), nw), dtype=np.int64)
    for w in range(nw):
        sel = word == w
        PA[:, w] = (DA[:, sel] << shifts[sel]).sum(axis=1)
        PB[:, w] = (DB[:, sel] << shifts[sel]).sum(axis=1)

    def atoms(ch):
        t, e, c = [], [], []
        for n, p in enumerate(ch._terms.values()):
            for x, y in p.items():
                t.append(n)
                e.append(x)
                c.append(y)
        return np.array(t), np.array(e, dtype=np.int64), np.array(c, dtype=np.int64)

    ta, ea, ca = atoms(A)
    tb, eb, cb = atoms(B)
    chunk = max(1, 2_000_000 // max(len(tb), 1))
    rows, sums, reps = [], [], []
    for s in range(0, len(ta), chunk):
        ia = np.repeat(np.arange(s, min(s + chunk, len(ta))), len(tb))
        ib = np.tile(np.arange(len(tb)), min(chunk, len(ta) - s))
        key = np.empty((len(ia), nw + 1), dtype=np.int64)
        key[:, :nw] = PA[ta[ia]] + PB[tb[ib]]
        key[:, nw] = ea[ia] + eb[ib] + D[ta[ia], tb[ib]]
        uniq, first, inv = np.unique(key, axis=0, return_index=True, return_inverse=True)
        tot = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(tot, inv.reshape(-1), ca[ia] * cb[ib])
        rows.append(uniq)
        sums.append(tot)
        reps.append(np.stack([ta[ia[first]], tb[ib[first]]], axis=1))
    key = np.concatenate(rows)
    tot0 = np.concatenate(sums)
    rep0 = np.concatenate(reps)
    uniq, first, inv = np.unique(key, axis=0, return_index=True, return_inverse=True)
    tot = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(tot, inv.reshape(-1), tot0)
    rep = rep0[first]

    nz = np.flatnonzero(tot)
    uniq, tot = uniq[nz], tot[nz]
    # decode each distinct packed A-vector once
    words, vid = np.unique(uniq[:, :nw], axis=0, return_inverse=True)
    vid = vid.reshape(-1)
    mask = (1 << bits) - 1
    dense = np.empty((len(words), len(cols)), dtype=np.int64)
    for c in range(len(cols)):
        dense[:, c] = (words[:, word[c]] >> shifts[c]) & mask
    r_idx, c_idx = np.nonzero(dense)
    vals = dense[r_idx, c_idx]
    bounds = np.searchsorted(r_idx, np.arange(len(words) + 1))
    vk = [tuple((cols[c], int(x)) for c, x in zip(c_idx[a:b].tolist(), vals[a:b].tolist()))
          for a, b in zip(bounds[:-1].tolist(), bounds[1:].tolist())]
    order = np.lexsort((uniq[:, nw], vid))
    out: dict[tuple, list] = {}
    for n, e, c in zip(vid[order].tolist(), uniq[order, nw].tolist(), tot[order].tolist()):
        out.setdefault(vk[n], []).append((e, c))
    return {k: tuple(p) for k, p in out.items()}


def star_power(X: TCharacter, k: int) -> TCharacter:
    out = TCharacter.unit(X.cartan)
    for _ in range(k):
        out = star_t(out, X)
    return out


# -- single-node t-kernel elements -------------------------------------------

def _string_t(cd: CartanData, i: int, seg) -> TCharacter:
    head = Monomial({(i, l): 1 for l in seg.shifts})
    return TCharacter(cd, head, {AVector._raw(s): ONE for s in _string_steps(i, seg, cd.r(i))})


@lru_cache(maxsize=65536)
def fit_expansion(cd: CartanData, i: int, slice_key: tuple) -> tuple:
    """F_{i,t} of the pure node-i monomial prod Y_{i,l}^{e}: ((steps, poly), ...).

    The ordered *_t product of the string characters (segments in canonical
    order, multiplicities as powers), rescaled so the head coefficient is 1.
    """
    from .sl2 import Segment
    out = TCharacter.unit(cd)
    for seg in segment_decompose(i, dict(slice_key), cd.r(i)):
        s = _string_t(cd, i, Segment(i, seg.start, seg.length, seg.step))
        for _ in range(seg.multiplicity):
            out = star_t(out, s)
    h = out.coefficient(AVector.zero())
    if not h.is_monomial() or h[h.min_exp()] != 1:
        raise AssertionError(f"head coefficient {h} of F_{i},t is not a power of t")
    sh = -h.min_exp()
    return tuple(sorted((v.items(), p.shift(sh)) for v, p in out.as_dict().items()))


def F_it(cd: CartanData, i: int, m: Monomial) -> TCharacter:
    """The t-deformed single-node element with head m (m must be i-dominant)."""
    if not is_dominant(m, [i]):
        raise NotDominantError(f"{m} is not {i}-dominant")
    yj = m.restrict([i])
    rest = (m / yj).as_dict()
    exp = fit_expansion(cd, i, tuple(sorted(m.node_slice(i).items())))
    # a = (m / Y_i-part, 0) times F_{i,t}(Y_i-part), normalized by the head twist
    a = (rest, (), {})
    d0 = _D(cd, *a, yj.as_dict(), (), {})
    terms = {}
    for steps, p in exp:
        d = _D(cd, *a, yj.as_dict(), steps, _u_of_v(cd, steps)) - d0
        terms[AVector._raw(steps)] = p.shift(d)
    return TCharacter(cd, m, terms)


def _t_expand(cd: CartanData, head: dict):
    def expand(j, vk, y):
        key = slice_key(y, j)
        exp = fit_expansion(cd, j, key)
        if len(exp) == 1:
            return ()
        yj = dict(((j, l), e) for l, e in key)
        am = dict(head)
        for k, e in yj.items():
            x = am.get(k, 0) - e
            if x:
                am[k] = x
            else:
                am.pop(k, None)
        uv = _u_of_v(cd, vk)
        d0 = _D(cd, am, vk, uv, yj, (), {})
        out = []
        for steps, p in exp:
            if not steps:
                continue
            d = _D(cd, am, vk, uv, yj, steps, _u_of_v(cd, steps)) - d0
            out.append((steps, p.shift(d)))
        return out
    return expand


def t_power_ratio(p: LaurentPoly, q: LaurentPoly) -> int | None:
    """k with p = t^k q, if any."""
    if not p or not q or len(p) != len(q):
        return None
    k = p.min_exp() - q.min_exp()
    return k if q.shift(k) == p else None


def t_algorithm(cd: CartanData, head: Monomial, max_height: int | None = None,
                max_terms: int | None = None, workers: int = 1) -> TCharacter:
    """The t-deformed algorithm from a dominant head."""
    if not cd.satisfies_t_hypothesis():
        raise PreconditionError(f"{cd.name} has C_ij C_ji > 3 for some i != j")
    gauge_fixes: list = []

    def resolve(cd_, fr, vk, y, neg):
        vals = {j: fr.pending(vk, j) for j in sorted(neg)}
        cands = list(vals.values())
        if all(c == cands[0] for c in cands):
            return cands[0]
        if any(t_power_ratio(c, cands[0]) is None for c in cands):
            raise InconsistentAlgorithm(Monomial.from_dict(y), vals)
        sym = bar_symmetrize(cands[0])
        gauge_fixes.append(Monomial.from_dict(y))
        return sym if sym is not None else cands[0]

    limits = Limits(max_height, max_terms, workers)
    values, _, meta = run_recursion(cd, head, limits, zero=ZERO, one=ONE, resolve=resolve,
                                    expand=_t_expand(cd, head.as_dict()), label="t")
    meta["gauge_fixes"] = gauge_fixes
    if max_height is not None:
        meta["max_height"] = max_height
    terms = {AVector._raw(vk): p for vk, p in values.items()}
    return TCharacter(cd, head, terms, meta=meta, truncated=meta["truncated"])


def fundamental_qt(cd: CartanData, i: int, l: int = 0, **kw) -> TCharacter:
    return t_algorithm(cd, Monomial.Y(i, l), **kw)


def qt_standard(cd: CartanData, factors, **kw) -> TCharacter:
    """Ordered *_t product of fundamental q,t-characters, shifts ascending (ties by node)."""
    out = TCharacter.unit(cd)
    cache: dict = {}
    for i, l in sorted(factors, key=lambda f: (f[1], cd.index[f[0]])):
        if (i, l) not in cache:
            cache[(i, l)] = fundamental_qt(cd, i, l, **kw)
        out = star_t(out, cache[(i, l)])
    return out


# -- views -------------------------------------------------------------------

def specialize_t1(tch: TCharacter) -> Character:
    terms: dict[Monomial, int] = {}
    for v, p in tch.as_dict().items():
        m = tch.y(v)
        terms[m] = terms.get(m, 0) + p.at_one()
    return Character({m: c for m, c in terms.items() if c}, head=tch.head, mode="int",
                     truncated=tch.truncated, cartan=tch.cartan)


def bar_symmetrize(p: LaurentPoly) -> LaurentPoly | None:
    """t^delta * p for the integer delta making it bar-invariant, or None."""
    if not p:
        return p
    s = p.min_exp() + p.max_exp()
    if s % 2:
        return None
    q = p.shift(-s // 2)
    return q if q == q.bar() else None


def self_twist(tch: TCharacter, v: AVector) -> int:
    return star_t_exponent(tch.cartan, (tch.head, v), (tch.head, v))


def normalized(tch: TCharacter) -> TCharacter:
    """Rescale the coefficient of each pair a by t^{-D(a,a)/2}."""
    terms = {}
    for v, p in tch.as_dict().items():
        d = self_twist(tch, v)
        if d % 2:
            raise ValueError(f"odd self-twist {d} at {tch.y(v)}")
        terms[v] = p.shift(-d // 2)
    return TCharacter(tch.cartan, tch.head, terms, meta=tch.meta, truncated=tch.truncated)


def bar_view(tch: TCharacter) -> dict[Monomial, LaurentPoly | None]:
    """Bar-symmetrized coefficient per y-monomial."""
    return {m: bar_symmetrize(p) for m, p in tch.by_monomial().items()}
