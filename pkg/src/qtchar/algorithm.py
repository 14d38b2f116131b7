"""The classical s/s_j recursion, standard products, L_J restriction and kernel decomposition."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cartan import CartanData, CartanError, check_invertible
from .character import Character
from .monomial import (AVector, Monomial, a_exponents, dominance_compare, is_dominant,
                       truncate)
from .sl2 import F_i, fi_expansion, li_expansion


class InconsistentAlgorithm(RuntimeError):
    def __init__(self, monomial, values):
        super().__init__(f"s_j values disagree at {monomial}: {values}")
        self.monomial = monomial
        self.values = values


class BudgetExceeded(RuntimeError):
    pass


class NonzeroResidue(ValueError):
    def __init__(self, residue: Character):
        super().__init__(f"kernel decomposition left {len(residue)} residual terms")
        self.residue = residue


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Limits:
    max_height: int | None = None
    max_terms: int | None = None
    workers: int = 1


def _add_scaled(target: dict, exps: dict, k: int):
    for key, e in exps.items():
        x = target.get(key, 0) + k * e
        if x:
            target[key] = x
        else:
            target.pop(key, None)


def _vplus(vk: tuple, steps: tuple) -> tuple:
    d = dict(vk)
    for key, e in steps:
        d[key] = d.get(key, 0) + e
    return tuple(sorted(d.items()))


def slice_key(y: dict, j: int) -> tuple:
    return tuple(sorted((l, e) for (i, l), e in y.items() if i == j and e > 0))


class Frontier:
    """Worklist grouped by height, with pending s_j tables.

    ``y`` maps an A-inverse vector (sorted tuple) to its monomial exponent dict.
    ``s_j`` maps a vector to a per-node dict of accumulated contributions.
    """

    def __init__(self, cd: CartanData, head: dict, zero):
        self.cd = cd
        self.zero = zero
        self.y: dict[tuple, dict] = {(): dict(head)}
        self.s_j: dict[tuple, dict[int, object]] = {}
        self.levels: dict[int, set] = {0: {()}}

    def monomial(self, vk: tuple, steps: tuple) -> tuple:
        nk = _vplus(vk, steps)
        if nk not in self.y:
            y = dict(self.y[vk])
            for (i, l), e in steps:
                _add_scaled(y, a_exponents(self.cd, i, l), -e)
            self.y[nk] = y
            self.levels.setdefault(sum(e for _, e in nk), set()).add(nk)
        return nk

    def push(self, nk: tuple, j: int, value):
        tab = self.s_j.setdefault(nk, {})
        x = tab.get(j, self.zero) + value
        if x:
            tab[j] = x
        else:
            tab.pop(j, None)

    def pending(self, vk: tuple, j: int):
        return self.s_j.get(vk, {}).get(j, self.zero)


def _neg_nodes(y: dict) -> set:
    return {i for (i, _), e in y.items() if e < 0}


def _resolve_int(cd, fr, vk, y, neg):
    vals = {j: fr.pending(vk, j) for j in sorted(neg)}
    if len(set(vals.values())) != 1:
        raise InconsistentAlgorithm(Monomial.from_dict(y), vals)
    return next(iter(vals.values()))


def run_recursion(cd: CartanData, head: Monomial, limits: Limits, *, zero, one,
                  resolve, expand, label: str):
    """Shared driver of the classical and t-deformed algorithms.

    ``expand(j, vk, y)`` returns [(steps, coeff), ...] for F_j at the tracked
    monomial; ``resolve`` picks s(m) from the per-node tables of a monomial that is
    non-dominant at the nodes in ``neg``.  Returns (values by vector, y by vector,
    metadata).
    """
    check_invertible(cd)
    if not is_dominant(head):
        raise PreconditionError(f"head {head} is not dominant")
    if limits.max_height is None and not cd.is_finite_type():
        raise PreconditionError(f"{cd.name} is not of finite type; max_height is mandatory")
    nodes = cd.nodes
    fr = Frontier(cd, head.as_dict(), zero)
    values: dict[tuple, object] = {}
    meta: dict = {"extra_dominant": [], "truncated": False, "algorithm": label}
    pool = ThreadPoolExecutor(limits.workers) if limits.workers > 1 else None
    try:
        while fr.levels:
            h = min(fr.levels)
            if limits.max_height is not None and h > limits.max_height:
                meta["truncated"] = True
                break
            level = sorted(fr.levels.pop(h))
            tasks = []
            for vk in level:
                y = fr.y[vk]
                neg = _neg_nodes(y)
                if h == 0:
                    val = one
                elif not neg:
                    if any(fr.pending(vk, j) for j in nodes):
                        meta["extra_dominant"].append(Monomial.from_dict(y))
                    val = zero
                else:
                    val = resolve(cd, fr, vk, y, neg)
                if val:
                    values[vk] = val
                    if limits.max_terms is not None and len(values) > limits.max_terms:
                        raise BudgetExceeded(f"more than {limits.max_terms} terms")
                for j in nodes:
                    if j in neg:
                        continue
                    w = val - fr.pending(vk, j)
                    if w:
                        tasks.append((vk, j, w))
            # F_j expansions are pure; compute them (possibly concurrently) then merge in order
            if pool is not None:
                results = list(pool.map(lambda t: expand(t[1], t[0], fr.y[t[0]]), tasks))
            else:
                results = [expand(j, vk, fr.y[vk]) for vk, j, _ in tasks]
            for (vk, j, w), exp in zip(tasks, results):
                for steps, c in exp:
                    if not steps:
                        continue
                    nk = fr.monomial(vk, steps)
                    fr.push(nk, j, w * c)
    finally:
        if pool is not None:
            pool.shutdown()
    return values, fr.y, meta


def _classical_expand(cd, expansion: str):
    fn = {"F": fi_expansion, "L": li_expansion}[expansion]

    def expand(j, vk, y):
        return fn(cd, j, slice_key(y, j))
    return expand


def classical_algorithm(cd: CartanData, head: Monomial, max_height: int | None = None,
                        max_terms: int | None = None, workers: int = 1,
                        expansion: str = "F") -> Character:
    """The character F(head) of the classical algorithm.

    ``expansion`` selects the single-node element pushed forward: ``"F"`` (the
    kernel element with a unique j-dominant monomial) or ``"L"`` (the string
    product).  Both give the same character.
    """
    limits = Limits(max_height, max_terms, workers)
    values, ys, meta = run_recursion(cd, head, limits, zero=0, one=1, resolve=_resolve_int,
                                     expand=_classical_expand(cd, expansion), label="classical")
    terms = {}
    vs = {}
    for vk, c in values.items():
        m = Monomial.from_dict(ys[vk])
        terms[m] = c
        vs[m] = AVector.from_dict(dict(vk))
    meta["v"] = vs
    if limits.max_height is not None:
        meta["max_height"] = limits.max_height
    return Character._trusted(terms, "int", head=head, truncated=meta["truncated"],
                              meta=meta, cartan=cd)


def fundamental_qcharacter(cd: CartanData, i: int, l: int = 0, max_height: int | None = None,
                           max_terms: int | None = None, workers: int = 1,
                           check: bool = True) -> Character:
    """q-character of the fundamental representation with highest monomial Y_{i,l}."""
    head = Monomial.Y(i, l)
    ch = classical_algorithm(cd, head, max_height, max_terms, workers)
    if check:
        dom = [m for m in ch.monomials() if is_dominant(m)]
        if dom != [head] or ch.meta["extra_dominant"]:
            raise AssertionError(f"fundamental character of {cd.name} node {i} has extra dominant terms")
        if not ch.truncated:
            vs = ch.meta["v"]
            for m in ch.monomials():
                if dominance_compare(cd, m, head) != vs[m]:
                    raise AssertionError(f"term {m} is not below its head")
    return ch


def standard_qcharacter(cd: CartanData, factors, max_height: int | None = None,
                        max_terms: int | None = None, workers: int = 1) -> Character:
    """Product of fundamental characters for the factor list [(i, l), ...]."""
    out = Character.unit()
    for i, l in factors:
        out = out * fundamental_qcharacter(cd, i, l, max_height, max_terms, workers)
    return out


def restrict_L_J(cd: CartanData, m: Monomial, J, max_height: int | None = None,
                 max_terms: int | None = None, guard: bool = True) -> Character:
    """L_J(m): the subdiagram algorithm on m^{(J)}, remapped to full-diagram A-inverses."""
    J = sorted(set(J))
    if not is_dominant(m, J):
        raise PreconditionError(f"{m} is not J-dominant for J={J}")
    sub = cd.subdiagram(J)
    if not sub.is_finite_type():
        raise CartanError(f"subdiagram {J} of {cd.name} is not of finite type")
    inner = classical_algorithm(sub, truncate(m, J), max_height, max_terms)
    if guard and inner.meta["extra_dominant"]:
        raise PreconditionError(f"{truncate(m, J)} admits further dominant monomials on {J}")
    terms = {}
    vs = {}
    base = m.as_dict()
    for mm, c in inner.items():
        v = inner.meta["v"][mm]
        y = dict(base)
        for (i, l), e in v.items():
            _add_scaled(y, a_exponents(cd, i, l), -e)
        key = Monomial.from_dict(y)
        terms[key] = c
        vs[key] = v
    return Character._trusted(terms, "int", head=m, cartan=cd,
                              meta={"v": vs, "extra_dominant": inner.meta["extra_dominant"]},
                              truncated=inner.truncated)


def kernel_decompose(cd: CartanData, ch: Character, J, max_steps: int = 100000):
    """Greedy J-kernel decomposition [(head, coeff), ...]; raises NonzeroResidue."""
    J = sorted(set(J))
    if ch.mode != "int":
        raise TypeError("kernel_decompose works on integer-mode characters")
    if ch.truncated:
        raise PreconditionError("kernel_decompose needs a complete (untruncated) character")
    head = ch.head if ch.head is not None else infer_head(cd, ch)
    residual = ch.as_dict()
    heights: dict[Monomial, int] = {}

    def height(mm):
        if mm not in heights:
            v = dominance_compare(cd, mm, head)
            heights[mm] = v.height() if v is not None else -1
        return heights[mm]

    out = []
    for _ in range(max_steps):
        cands = [mm for mm, c in residual.items() if c and is_dominant(mm, J)]
        if not cands:
            break
        top = min(cands, key=lambda mm: (height(mm), mm.sort_key()))
        c = residual[top]
        out.append((top, c))
        piece = F_i(cd, J[0], top) if len(J) == 1 else restrict_L_J(cd, top, J, guard=False)
        for mm, x in piece.items():
            y = residual.get(mm, 0) - c * x
            if y:
                residual[mm] = y
            else:
                residual.pop(mm, None)
    else:
        raise BudgetExceeded("kernel decomposition did not finish")
    if residual:
        raise NonzeroResidue(Character(residual))
    return out


def infer_head(cd: CartanData, ch: Character) -> Monomial:
    """The unique term that every other term lies below."""
    for m in ch.monomials():
        if is_dominant(m) and all(dominance_compare(cd, x, m) is not None for x in ch.monomials()):
            return m
    raise ValueError("character has no head dominating all of its terms")
