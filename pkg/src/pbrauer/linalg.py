"""Exact linear algebra over Q with sparse rows.

Rows are dicts ``column -> Fraction`` (any hashable, totally ordered column
keys).  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


class Echelon:
    """Incrementally grown row-echelon basis.

    Each stored row has pivot 1 at its smallest column, so reduction only
    ever introduces larger columns.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = {c: Fraction(x) for c, x in vec.items() if x}
        done: dict = {}
        while v:
            c = min(v)
            a = v.pop(c)
            row = self.rows.get(c)
            if row is None:
                done[c] = a
                continue
            for cc, x in row.items():
                if cc == c:
                    continue
                if cc in done:
                    # cannot happen: row columns exceed c and done < c only
                    raise AssertionError("echelon order violated")
                y = v.get(cc, 0) - a * x
                if y:
                    v[cc] = y
                else:
                    v.pop(cc, None)
        return done

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; True if it enlarged the span."""
        r = self._reduce_lead(vec)
        if r is None:
            return False
        c = min(r)
        inv = 1 / r[c]
        self.rows[c] = {cc: x * inv for cc, x in r.items()}
        return True

    def _reduce_lead(self, vec: Mapping):
        # reduce until the leading column is a non-pivot; tail stays unreduced
        v = {c: Fraction(x) for c, x in vec.items() if x}
        while v:
            c = min(v)
            row = self.rows.get(c)
            if row is None:
                return v
            a = v[c]
            for cc, x in row.items():
                y = v.get(cc, 0) - a * x
                if y:
                    v[cc] = y
                else:
                    v.pop(cc, None)
        return None

    def contains(self, vec: Mapping) -> bool:
        return self._reduce_lead(vec) is None


def rank(rows: Iterable[Mapping]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def dense_rows(matrix: Sequence[Sequence]) -> list:
    return [{j: Fraction(x) for j, x in enumerate(row) if x} for row in matrix]


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    return rank(dense_rows(matrix))


def in_span(vec: Mapping, rows: Iterable[Mapping]) -> bool:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.contains(vec)


def rref(rows: Iterable[Mapping]) -> tuple:
    """Reduced row echelon form: (pivot columns, rows), back-substituted."""
    e = Echelon()
    for r in rows:
        e.add(r)
    pivots = sorted(e.rows)
    full = {c: dict(e.rows[c]) for c in pivots}
    for c in reversed(pivots):
        row = full[c]
        for c2 in pivots:
            if c2 >= c:
                break
            r2 = full[c2]
            a = r2.get(c)
            if a:
                for cc, x in row.items():
                    y = r2.get(cc, 0) - a * x
                    if y:
                        r2[cc] = y
                    else:
                        r2.pop(cc, None)
    return pivots, [full[c] for c in pivots]


def nullspace(rows: Iterable[Mapping], columns: Sequence[Hashable]) -> list:
    """Basis of ``{x : row . x = 0 for all rows}`` as dicts over ``columns``."""
    pivots, red = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in columns:
        if f in pivot_set:
            continue
        vec = {f: Fraction(1)}
        for c, row in zip(pivots, red):
            a = row.get(f)
            if a:
                vec[c] = -a
        basis.append(vec)
    return basis


def nullity(rows: Iterable[Mapping], ncols: int) -> int:
    return ncols - rank(rows)


class LeftSolver:
    """Reusable solver for ``sum c_i rows[i] = target``."""

    def __init__(self, rows: Sequence[Mapping]):
        self.n = len(rows)
        self.ech = Echelon()
        for i, r in enumerate(rows):
            aug = dict(r)
            aug[_Tag(i)] = Fraction(1)
            self.ech.add(aug)

    def solve(self, target: Mapping):
        red = self.ech.reduce(target)
        if any(not isinstance(c, _Tag) for c in red):
            return None
        coeffs = [Fraction(0)] * self.n
        for c, x in red.items():
            coeffs[c.i] = -x
        return coeffs


def solve_left(rows: Sequence[Mapping], target: Mapping):
    """Coefficients ``c`` with ``sum c_i rows[i] = target`` or None."""
    return LeftSolver(rows).solve(target)


class _Tag:
    """Column key sorting after every ordinary key."""

    __slots__ = ("i",)

    def __init__(self, i):
        self.i = i

    def __lt__(self, other):
        if isinstance(other, _Tag):
            return self.i < other.i
        return False

    def __gt__(self, other):
        if isinstance(other, _Tag):
            return self.i > other.i
        return True

    def __eq__(self, other):
        return isinstance(other, _Tag) and self.i == other.i

    def __hash__(self):
        return hash(("tag", self.i))


def mat_mul(A, B):
    """Dense exact product of list-of-lists matrices."""
    if not A:
        return []
    m = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in Bt]
            for row in A] if m else [[] for _ in A]


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def identity_matrix(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def determinant(A) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] * inv
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det
