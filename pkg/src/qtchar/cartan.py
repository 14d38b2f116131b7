"""Cartan matrices of the built-in families and their quantized form.

Node labels are 1..n for finite types and 0..l for the affine family
``AffineA`` (cyclic Dynkin diagram).  Conventions: ``C[i][j] = 2(a_i,a_j)/(a_i,a_i)``
and ``r_i = (a_i,a_i)/2`` with short roots normalized to ``r = 1``, so that
``diag(r) C`` is symmetric.  B_n has its short root at node n, C_n its long
root at node n, F4 has short nodes 1, 2 and long nodes 3, 4, G2 has its long
root at node 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from .laurent import LaurentPoly

FAMILIES = ("A", "B", "C", "D", "F", "G", "AffineA")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "AffineA": 2}


class CartanError(ValueError):
    pass


@dataclass(frozen=True)
class CartanData:
    family: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    nodes: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.nodes:
            object.__setattr__(self, "nodes", tuple(range(1, len(self.matrix) + 1)))
        n = len(self.nodes)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise CartanError("matrix shape does not match node list")
        if len(self.symmetrizer) != n or any(x <= 0 for x in self.symmetrizer):
            raise CartanError("symmetrizer must be n positive integers")
        C = self.matrix
        for i in range(n):
            if C[i][i] != 2:
                raise CartanError("diagonal entries must be 2")
            for j in range(n):
                if i != j and (C[i][j] > 0 or (C[i][j] == 0) != (C[j][i] == 0)):
                    raise CartanError(f"invalid off-diagonal entries at ({i}, {j})")
                if self.symmetrizer[i] * C[i][j] != self.symmetrizer[j] * C[j][i]:
                    raise CartanError("diag(r)*C is not symmetric")

    @property
    def name(self) -> str:
        if self.family == "AffineA":
            return f"A{self.rank}~"
        if self.family == "sub":
            return "sub[" + ",".join(map(str, self.nodes)) + "]"
        return f"{self.family}{self.rank}"

    @cached_property
    def index(self) -> dict[int, int]:
        return {node: k for k, node in enumerate(self.nodes)}

    def r(self, node: int) -> int:
        return self.symmetrizer[self.index[node]]

    def entry(self, i: int, j: int) -> int:
        """C_{ij} addressed by node labels."""
        return self.matrix[self.index[i]][self.index[j]]

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        """Nodes j != i with C_{ji} < 0, paired with C_{ji}."""
        k = self.index[i]
        return [(self.nodes[a], self.matrix[a][k]) for a in range(len(self.nodes))
                if a != k and self.matrix[a][k] < 0]

    def symmetrized(self) -> list[list[int]]:
        return [[self.symmetrizer[i] * self.matrix[i][j] for j in range(len(self.nodes))]
                for i in range(len(self.nodes))]

    def subdiagram(self, subset) -> "CartanData":
        """Restriction of C to the given nodes (labels preserved)."""
        sub = tuple(sorted(set(subset)))
        for j in sub:
            if j not in self.index:
                raise CartanError(f"unknown node {j} for {self.name}")
        idx = [self.index[j] for j in sub]
        M = tuple(tuple(self.matrix[a][b] for b in idx) for a in idx)
        return CartanData("sub", len(sub), M, tuple(self.symmetrizer[a] for a in idx), sub)

    def is_finite_type(self) -> bool:
        """diag(r)C positive definite, tested by exact leading principal minors."""
        S = self.symmetrized()
        n = len(S)
        A = [[Fraction(x) for x in row] for row in S]
        for k in range(n):
            piv = A[k][k]
            if piv <= 0:
                return False
            for i in range(k + 1, n):
                f = A[i][k] / piv
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
        return True

    def satisfies_t_hypothesis(self) -> bool:
        """i != j implies C_ij C_ji <= 3 (well-definedness of the t-deformed algorithm)."""
        n = len(self.nodes)
        return all(self.matrix[i][j] * self.matrix[j][i] <= 3
                   for i in range(n) for j in range(n) if i != j)


def _chain(n: int) -> list[list[int]]:
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = C[i + 1][i] = -1
    return C


def build_cartan(family: str, rank: int) -> CartanData:
    """Cartan matrix and minimal symmetrizer of a built-in family."""
    if family not in FAMILIES:
        raise CartanError(f"unknown family {family!r}")
    n = rank
    if family in _MIN_RANK and n < _MIN_RANK[family]:
        raise CartanError(f"rank {n} invalid for family {family}")
    if family == "F" and n != 4:
        raise CartanError("family F requires rank 4")
    if family == "G" and n != 2:
        raise CartanError("family G requires rank 2")

    nodes: tuple[int, ...] = ()
    if family == "A":
        C, r = _chain(n), [1] * n
    elif family == "B":
        C, r = _chain(n), [2] * (n - 1) + [1]
        C[n - 1][n - 2] = -2
    elif family == "C":
        C, r = _chain(n), [1] * (n - 1) + [2]
        C[n - 2][n - 1] = -2
    elif family == "D":
        C, r = _chain(n - 1) + [[0] * n], [1] * n
        for row in C[:-1]:
            row.append(0)
        C[n - 1][n - 1] = 2
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif family == "F":
        C, r = _chain(4), [1, 1, 2, 2]
        C[1][2] = -2
    elif family == "G":
        C, r = _chain(2), [3, 1]
        C[1][0] = -3
    else:  # AffineA
        m = n + 1
        C, r = _chain(m), [1] * m
        C[0][m - 1] = C[m - 1][0] = -1
        nodes = tuple(range(m))
    return CartanData(family, n, tuple(map(tuple, C)), tuple(r), nodes)


_SPEC = re.compile(r"^\s*([ABCDFG])(\d+)(~?)\s*$")


def parse_family(spec: str) -> CartanData:
    """``"A5"``, ``"B3"``, ``"F4"``, ``"A2~"`` (tilde = untwisted affine)."""
    m = _SPEC.match(spec)
    if not m:
        raise CartanError(f"bad family spec {spec!r}; expected e.g. A5, B3, C4, D4, F4, G2, A2~")
    letter, rank, tilde = m.group(1), int(m.group(2)), m.group(3)
    if tilde:
        if letter != "A":
            raise CartanError("only untwisted affine type A (e.g. A2~) is supported")
        return build_cartan("AffineA", rank)
    return build_cartan(letter, rank)


# -- quantized Cartan matrix -------------------------------------------------

@dataclass(frozen=True)
class ZLaurentMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def at_one(self) -> list[list[int]]:
        """Formal substitution z -> 1."""
        return [[p.at_one() for p in row] for row in self.entries]

    def determinant(self) -> LaurentPoly:
        """Exact Laplace expansion along rows, memoized on column subsets."""
        n = self.size
        memo: dict[int, LaurentPoly] = {}

        # sign alternates over the free columns only
        def minor_signed(row: int, cols: int) -> LaurentPoly:
            if row == n:
                return LaurentPoly.const(1, "z")
            if cols in memo:
                return memo[cols]
            acc = LaurentPoly({}, "z")
            k = 0
            for c in range(n):
                if cols & (1 << c):
                    continue
                e = self.entries[row][c]
                if e:
                    sub = minor_signed(row + 1, cols | (1 << c))
                    term = e * sub
                    acc = acc + (term if k % 2 == 0 else -term)
                k += 1
            memo[cols] = acc
            return acc

        return minor_signed(0, 0)


def quantized_cartan(cd: CartanData) -> ZLaurentMatrix:
    """C(z): diagonal z^{r_i} + z^{-r_i}, off-diagonal [C_ij]_z."""
    n = len(cd.nodes)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                r = cd.symmetrizer[i]
                row.append(LaurentPoly({r: 1, -r: 1}, "z"))
            else:
                row.append(LaurentPoly.quantum_integer(cd.matrix[i][j], "z"))
        rows.append(tuple(row))
    return ZLaurentMatrix(tuple(rows))


def is_invertible(qc: ZLaurentMatrix) -> bool:
    return bool(qc.determinant())


def sufficient_condition(cd: CartanData) -> bool:
    """C_ij < -1 implies -C_ji <= r_i; known to force det C(z) != 0."""
    n = len(cd.nodes)
    return all(-cd.matrix[j][i] <= cd.symmetrizer[i]
               for i in range(n) for j in range(n)
               if i != j and cd.matrix[i][j] < -1)


def check_invertible(cd: CartanData) -> None:
    """Gate used by the character algorithms."""
    if not is_invertible(quantized_cartan(cd)):
        raise CartanError(f"quantized Cartan matrix of {cd.name} is singular")


def minimal_symmetrizer(matrix) -> tuple[int, ...]:
    """Smallest positive integers r with diag(r)C symmetric (connected or not)."""
    n = len(matrix)
    r: list[Fraction | None] = [None] * n
    for start in range(n):
        if r[start] is not None:
            continue
        r[start] = Fraction(1)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and matrix[i][j] and r[j] is None:
                    r[j] = r[i] * matrix[i][j] / matrix[j][i]
                    comp.append(j)
                    stack.append(j)
        den = 1
        for j in comp:
            den = den * r[j].denominator // gcd(den, r[j].denominator)
        vals = [int(r[j] * den) for j in comp]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for j, v in zip(comp, vals):
            r[j] = Fraction(v // g)
    return tuple(int(x) for x in r)
