"""Partitions, standard tableaux and exact Specht representations of S_k.

Permutations are one-line tuples ``w`` with ``w[x-1] = w(x)``; products
compose right to left, ``(u*v)(x) = u(v(x))``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .linalg import LeftSolver

MAX_WEIGHT = 7

Partition = tuple


def parse_partition(text: str) -> Partition:
    """``"3,1,1"``; ``"0"``, ``""`` or ``"()"`` give the empty partition."""
    t = text.strip().strip("()[]").replace(" ", "")
    if t in ("", "0", "∅"):
        return ()
    parts = tuple(int(x) for x in t.split(",") if x)
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"{text!r} is not a partition")
    return parts


def format_partition(lam: Partition) -> str:
    return "∅" if not lam else "(" + ",".join(map(str, lam)) + ")"


@lru_cache(maxsize=None)
def partitions(k: int) -> list:
    """Partitions of ``k`` in reverse lexicographic order."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(k, k, [])
    return out


def partitions_upto(k: int) -> list:
    return [lam for j in range(k + 1) for lam in partitions(j)]


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def hook_length_dim(lam: Partition) -> int:
    k = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return math.factorial(k) // prod


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> list:
    """Standard tableaux as tuples of rows, in a fixed order."""
    k = sum(lam)
    out = []
    rows = [[] for _ in lam]

    def rec(x):
        if x > k:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, cap in enumerate(lam):
            if len(rows[i]) < cap and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(x)
                rec(x + 1)
                rows[i].pop()

    rec(1)
    return out


# -- permutations ---------------------------------------------------------------


def perm_mul(u, v) -> tuple:
    return tuple(u[v[x] - 1] for x in range(len(v)))


def perm_inv(w) -> tuple:
    out = [0] * len(w)
    for x, y in enumerate(w):
        out[y - 1] = x + 1
    return tuple(out)


def perm_sign(w) -> int:
    seen = [False] * len(w)
    sign = 1
    for i in range(len(w)):
        if not seen[i]:
            j, L = i, 0
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                L += 1
            if L % 2 == 0:
                sign = -sign
    return sign


def simple_transposition(k: int, i: int) -> tuple:
    w = list(range(1, k + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w) -> list:
    """Indices ``[i1, ..., ir]`` with ``w = s_i1 s_i2 ... s_ir``."""
    w = list(w)
    rec = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                # w * s_{i+1} swaps positions i, i+1
                w[i], w[i + 1] = w[i + 1], w[i]
                rec.append(i + 1)
                changed = True
    return rec[::-1]


def cycle_type(w) -> Partition:
    seen = [False] * len(w)
    lens = []
    for i in range(len(w)):
        if not seen[i]:
            j, L = i, 0
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                L += 1
            lens.append(L)
    return tuple(sorted(lens, reverse=True))


def perm_from_cycle_type(mu: Partition) -> tuple:
    w = []
    start = 1
    for L in mu:
        w += [start + (t + 1) % L for t in range(L)]
        start += L
    return tuple(w)


# -- Specht modules ---------------------------------------------------------------


class SpechtRep:
    """Polytabloid realisation of the Specht module S(lambda).

    ``gens[i-1]`` is the integer matrix of ``s_i`` acting on column vectors in
    the standard polytabloid basis; ``gram`` is the restriction of the
    tabloid form.
    """

    def __init__(self, lam: Partition):
        lam = tuple(lam)
        k = sum(lam)
        if k > MAX_WEIGHT:
            raise ValueError(f"weight {k} exceeds the bound {MAX_WEIGHT}")
        self.lam = lam
        self.k = k
        self.tableaux = standard_tableaux(lam)
        self.dim = len(self.tableaux)
        self._poly = [_polytabloid(T) for T in self.tableaux]
        self.gram = [[int(_dot(a, b)) for b in self._poly] for a in self._poly]
        self._solver = LeftSolver(self._poly)
        self.gens = [self._matrix(simple_transposition(k, i)) for i in range(1, k)]
        self._cache: dict = {tuple(range(1, k + 1)): _identity(self.dim)}

    def _matrix(self, w) -> list:
        """Matrix of ``w`` by re-expressing ``w e_T`` in the standard basis."""
        cols = []
        for T in self.tableaux:
            image = _polytabloid(tuple(tuple(w[x - 1] for x in row) for row in T))
            c = self._solver.solve(image)
            if c is None:
                raise AssertionError("polytabloid image outside the span")
            cols.append(c)
        mat = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        if any(x.denominator != 1 for row in mat for x in row):
            raise AssertionError("non-integral Specht matrix")
        return [[int(x) for x in row] for row in mat]

    def rho(self, w) -> list:
        """Matrix of the permutation ``w`` (via a reduced word)."""
        w = tuple(w)
        m = self._cache.get(w)
        if m is None:
            m = _identity(self.dim)
            for i in reduced_word(w):
                m = _mm(m, self.gens[i - 1])
            self._cache[w] = m
        return m

    def rho_direct(self, w) -> list:
        return self._matrix(tuple(w))

    def character(self, w) -> int:
        m = self.rho(w)
        return sum(m[i][i] for i in range(self.dim))


@lru_cache(maxsize=None)
def specht_rep(lam: Partition) -> SpechtRep:
    return SpechtRep(tuple(lam))


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _mm(A, B):
    n = len(A)
    m = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(m)] for i in range(n)]


def _tabloid(rows) -> tuple:
    return tuple(tuple(sorted(r)) for r in rows)


def _columns(T):
    ncols = len(T[0]) if T else 0
    return [[row[j] for row in T if j < len(row)] for j in range(ncols)]


def _polytabloid(T) -> dict:
    """Sum over column permutations of sign * tabloid."""
    cols = _columns(T)
    out: dict = {}
    for perms in itertools.product(*[itertools.permutations(c) for c in cols]):
        relabel = {}
        sign = 1
        for col, pc in zip(cols, perms):
            idx = [col.index(x) for x in pc]
            sign *= perm_sign(tuple(i + 1 for i in idx))
            relabel.update(zip(col, pc))
        rows = [[relabel[x] for x in row] for row in T]
        key = _tabloid(rows)
        out[key] = out.get(key, 0) + sign
    return {t: Fraction(c) for t, c in out.items() if c}


def _dot(a: dict, b: dict):
    return sum((v * b[t] for t, v in a.items() if t in b), Fraction(0))


# -- Young graph ----------------------------------------------------------------------


def branch_arrows(lam: Partition, direction: str = "down") -> list:
    """``down``: remove a removable node; ``up``: add an insertable node."""
    lam = tuple(lam)
    out = []
    if direction == "down":
        for i, p in enumerate(lam):
            if i == len(lam) - 1 or lam[i + 1] < p:
                mu = list(lam)
                mu[i] -= 1
                out.append(tuple(x for x in mu if x))
    elif direction == "up":
        for i in range(len(lam) + 1):
            if i == 0 or lam[i - 1] > (lam[i] if i < len(lam) else 0):
                mu = list(lam) + [0]
                mu[i] += 1
                out.append(tuple(x for x in mu if x))
    else:
        raise ValueError(f"direction must be up or down, not {direction!r}")
    return out


def horizontal_strip(lam: Partition, mu: Partition, l: int) -> bool:
    """mu/lam is a horizontal strip of size l (Pieri)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(mu) - sum(lam) != l:
        return False
    if len(mu) < len(lam):
        return False
    lp = list(lam) + [0] * (len(mu) - len(lam))
    for i in range(len(mu)):
        if mu[i] < lp[i]:
            return False
        # interlacing mu_{i+1} <= lam_i
        if i + 1 < len(mu) and mu[i + 1] > lp[i]:
            return False
    return True


def induced_multiplicity(lam: Partition, l: int, mu: Partition) -> int:
    """Multiplicity of S(mu) in Ind_{S_k x S_l}(S(lam) x trivial), by characters.

    Frobenius reciprocity: <Res chi_mu, chi_lam x 1> over S_k x S_l, summed
    over conjugacy classes of the subgroup.
    """
    k = sum(lam)
    if sum(mu) != k + l:
        return 0
    rho_mu = specht_rep(tuple(mu))
    rho_lam = specht_rep(tuple(lam))
    total = Fraction(0)
    for a in partitions(k):
        for b in partitions(l):
            size_a = _class_size(a)
            size_b = _class_size(b)
            wa = perm_from_cycle_type(a)
            wb = perm_from_cycle_type(b)
            w = tuple(wa) + tuple(x + k for x in wb)
            total += size_a * size_b * rho_mu.character(w) * rho_lam.character(wa)
    total /= math.factorial(k) * math.factorial(l)
    if total.denominator != 1:
        raise AssertionError("non-integral multiplicity")
    return int(total)


def _class_size(mu: Partition) -> int:
    k = sum(mu)
    z = 1
    for L in set(mu):
        c = mu.count(L)
        z *= L ** c * math.factorial(c)
    return math.factorial(k) // z


def all_perms(k: int) -> Iterable[tuple]:
    return itertools.permutations(range(1, k + 1))
