"""Left cells, cell modules and the Specht modules Delta(n, lambda).

A left cell is fixed by the blocks lying inside the primed column (its
*right configuration*) and the ordered primed vertices left over (its
*slots*).  A cell diagram factors as ``d = d_h o (1 x P_pi)``: the half
diagram ``h`` carries the unprimed structure, and ``pi`` sends the ``i``-th
propagating point of ``h`` (increasing order) to slot ``pi(i)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import diagram as D
from .algebra import Element, as_element
from .diagram import Diagram, compose
from .linalg import matrix_rank
from .scalar import ONE, ZERO, Scalar, evaluate
from .symmetric import perm_inv, specht_rep

# -- descriptors ----------------------------------------------------------------


@dataclass(frozen=True)
class CellDescriptor:
    n: int
    right_config: tuple  # blocks of primed (negative) vertices
    slots: tuple         # uncovered primed vertices, as positive labels, increasing

    @property
    def k(self) -> int:
        return len(self.slots)

    def __str__(self):
        cfg = " | ".join(" ".join(f"{-v}'" for v in b) for b in self.right_config)
        return f"cell(n={self.n}, right=[{cfg}], slots={list(self.slots)})"


def canonical_cell(n: int, k: int) -> CellDescriptor:
    """Singletons 1'..(n-k)', slots (n-k+1)'..n'."""
    if not 0 <= k <= n:
        raise ValueError(f"propagating number {k} not in 0..{n}")
    return CellDescriptor(n, tuple((-j,) for j in range(1, n - k + 1)), tuple(range(n - k + 1, n + 1)))


def brauer_cell(n: int, k: int) -> CellDescriptor:
    """Pairs {1',2'}, {3',4'}, ... then slots."""
    if not 0 <= k <= n or (n - k) % 2:
        raise ValueError(f"no Brauer cell with {k} propagating lines at rank {n}")
    cfg = tuple((-(2 * j + 1), -(2 * j + 2)) for j in range((n - k) // 2))
    return CellDescriptor(n, cfg, tuple(range(n - k + 1, n + 1)))


def make_cell(n: int, right_config, slots=None) -> CellDescriptor:
    cfg = tuple(tuple(sorted(b, reverse=True)) for b in right_config)
    covered = {-v for b in cfg for v in b}
    if any(v >= 0 for b in cfg for v in b):
        raise ValueError("right configuration must use primed (negative) vertices")
    if slots is None:
        slots = tuple(j for j in range(1, n + 1) if j not in covered)
    return CellDescriptor(n, tuple(sorted(cfg, key=lambda b: [-v for v in b])), tuple(slots))


# -- half diagrams -----------------------------------------------------------------


class HalfDiagram(NamedTuple):
    n: int
    left_blocks: tuple  # pairs and singletons of unprimed vertices
    prop: tuple         # propagating points, increasing

    @property
    def k(self) -> int:
        return len(self.prop)

    def singletons(self) -> list:
        return [b[0] for b in self.left_blocks if len(b) == 1]

    def __str__(self):
        blocks = " | ".join(" ".join(map(str, b)) for b in self.left_blocks)
        return f"[{blocks} ; prop {list(self.prop)}]"


@lru_cache(maxsize=None)
def half_diagrams(n: int, k: int, brauer: bool = False) -> list:
    """Left configurations with exactly ``k`` propagating points."""
    out = []
    for prop in itertools.combinations(range(1, n + 1), k):
        rest = [v for v in range(1, n + 1) if v not in prop]
        for inv in D._involutions(len(rest), not brauer):
            blocks = []
            for x, y in enumerate(inv):
                if y == x:
                    blocks.append((rest[x],))
                elif y > x:
                    blocks.append((rest[x], rest[y]))
            out.append(HalfDiagram(n, tuple(blocks), tuple(prop)))
    return out


def half_count(n: int, k: int, brauer: bool = False) -> int:
    """C(n,k) I(n-k), or C(n,k) (n-k-1)!! for Brauer half diagrams."""
    if not 0 <= k <= n:
        return 0
    if brauer:
        if (n - k) % 2:
            return 0
        return math.comb(n, k) * D.double_factorial(n - k - 1)
    return math.comb(n, k) * D.count_involutions(n - k)


def cell_diagram(h: HalfDiagram, cell: CellDescriptor, pi=None) -> Diagram:
    k = cell.k
    if h.k != k or h.n != cell.n:
        raise ValueError("half diagram does not fit the cell")
    pi = pi or tuple(range(1, k + 1))
    blocks = list(h.left_blocks) + list(cell.right_config)
    blocks += [(h.prop[i], -cell.slots[pi[i] - 1]) for i in range(k)]
    return Diagram.from_blocks(cell.n, blocks)


class NotInCell(ValueError):
    pass


def factor(d: Diagram, cell: CellDescriptor):
    """``(h, pi)`` with ``d = d_h o (1 x P_pi)``; raises NotInCell."""
    n = d.n
    if n != cell.n:
        raise NotInCell("rank mismatch")
    left, right, props = [], [], []
    for b in d.blocks:
        if all(v > 0 for v in b):
            left.append(b)
        elif all(v < 0 for v in b):
            right.append(tuple(sorted(b, reverse=True)))
        else:
            a = b[0] if b[0] > 0 else b[1]
            c = -(b[1] if b[0] > 0 else b[0])
            props.append((a, c))
    if sorted(right, key=lambda b: [-v for v in b]) != list(cell.right_config):
        raise NotInCell(f"{d} is not in {cell}")
    props.sort()
    slot_index = {s: i + 1 for i, s in enumerate(cell.slots)}
    try:
        pi = tuple(slot_index[c] for _, c in props)
    except KeyError:
        raise NotInCell(f"{d} is not in {cell}") from None
    left.sort(key=lambda b: b)
    return HalfDiagram(n, tuple(left), tuple(a for a, _ in props)), pi


def cell_members(cell: CellDescriptor) -> list:
    out = []
    for d in D.enumerate_diagrams(cell.n):
        try:
            factor(d, cell)
        except NotInCell:
            continue
        out.append(d)
    return out


# -- Scalar matrices ----------------------------------------------------------------


def smat_zero(r, c=None):
    c = r if c is None else c
    return [[ZERO] * c for _ in range(r)]


def smat_identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def smat_mul(A, B):
    n = len(A)
    m = len(B[0]) if B else 0
    inner = len(B)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = ZERO
            for t in range(inner):
                a = Ai[t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def smat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def smat_scale(A, c):
    return [[a * c for a in row] for row in A]


def smat_transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def smat_eval(A, delta, delta_prime):
    return [[evaluate(a, delta, delta_prime) for a in row] for row in A]


def smat_at_dp_zero(A):
    return [[a.at_dp_zero() for a in row] for row in A]


def fmat_mul(A, B):
    n = len(A)
    m = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(A[i], Bt[j]) if a and b), Fraction(0)) for j in range(m)]
            for i in range(n)]


# -- modules ---------------------------------------------------------------------------


class DeltaModule:
    """Delta(n, lambda) = C_L (x)_{S_k} S(lambda), basis (half diagram, tableau index).

    With ``brauer=True`` the same construction over pair partitions gives the
    Brauer Specht module; its action is only defined for Brauer diagrams.
    """

    def __init__(self, n: int, lam, cell: CellDescriptor | None = None, brauer: bool = False):
        lam = tuple(lam)
        k = sum(lam)
        if k > n:
            raise ValueError(f"|lambda| = {k} exceeds n = {n}")
        if cell is None:
            cell = brauer_cell(n, k) if brauer else canonical_cell(n, k)
        if cell.k != k or cell.n != n:
            raise ValueError("cell does not match (n, lambda)")
        self.n = n
        self.lam = lam
        self.k = k
        self.cell = cell
        self.brauer = brauer
        self.specht = specht_rep(lam)
        self.halves = half_diagrams(n, k, brauer)
        self.half_index = {h: i for i, h in enumerate(self.halves)}
        f = self.specht.dim
        self.f = f
        self.basis = [(h, b) for h in self.halves for b in range(f)]
        self.dim = len(self.basis)
        self._diagrams = [cell_diagram(h, cell) for h in self.halves]
        self._act: dict = {}

    def index(self, h: HalfDiagram, b: int) -> int:
        return self.half_index[h] * self.f + b

    def _group_matrix(self, pi) -> list:
        # d = h o P_pi corresponds to h (x) rho(pi^-1) b
        return self.specht.rho(perm_inv(pi))

    def act_diagram(self, d: Diagram) -> list:
        """Scalar matrix of a single diagram (columns = inputs)."""
        if d.n != self.n:
            raise ValueError(f"rank mismatch: {d.n} vs {self.n}")
        if self.brauer and not D.is_brauer(d):
            raise ValueError("Brauer Specht modules only carry the Brauer subalgebra")
        m = self._act.get(d)
        if m is not None:
            return m
        f = self.f
        mat = smat_zero(self.dim)
        for col_h, dh in enumerate(self._diagrams):
            loops, strings, res = compose(d, dh)
            if D.propagating(res) < self.k:
                continue
            h2, pi = factor(res, self.cell)
            c = Scalar({(loops, strings): 1})
            g = self._group_matrix(pi)
            r0 = self.half_index[h2] * f
            c0 = col_h * f
            for i in range(f):
                for j in range(f):
                    if g[i][j]:
                        mat[r0 + i][c0 + j] = mat[r0 + i][c0 + j] + c * g[i][j]
        self._act[d] = mat
        return mat

    def act(self, x) -> list:
        x = as_element(x)
        out = smat_zero(self.dim)
        for d, c in x.terms.items():
            out = smat_add(out, smat_scale(self.act_diagram(d), c))
        return out

    def act_at(self, x, delta, delta_prime) -> list:
        return smat_eval(self.act(x), delta, delta_prime)

    def gram(self) -> list:
        """Cellular form: <d_h, d_h'> read off from star(d_h) o d_h'."""
        f = self.f
        G = smat_zero(self.dim)
        Gl = self.specht.gram
        stars = [D.star(d) for d in self._diagrams]
        top = HalfDiagram(self.n, tuple(tuple(sorted(-v for v in b)) for b in self.cell.right_config),
                          tuple(self.cell.slots))
        for a, sa in enumerate(stars):
            for b, db in enumerate(self._diagrams):
                loops, strings, res = compose(sa, db)
                if D.propagating(res) < self.k:
                    continue
                h, pi = factor(res, self.cell)
                if h != top:
                    raise AssertionError("star(d_h) o d_h' left the H-class")
                c = Scalar({(loops, strings): 1})
                g = _imul(Gl, self._group_matrix(pi))
                for i in range(f):
                    for j in range(f):
                        if g[i][j]:
                            G[a * f + i][b * f + j] = c * g[i][j]
        return G

    def gram_at(self, delta, delta_prime) -> list:
        return smat_eval(self.gram(), delta, delta_prime)

    def gram_rank(self, delta, delta_prime) -> int:
        return matrix_rank(self.gram_at(delta, delta_prime))


def _imul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


@lru_cache(maxsize=None)
def delta_module(n: int, lam: tuple, brauer: bool = False) -> DeltaModule:
    return DeltaModule(n, tuple(lam), brauer=brauer)


class CellModule:
    """The cell module C_L itself: span of the cell, x.d = xd or 0."""

    def __init__(self, cell: CellDescriptor):
        self.cell = cell
        self.n = cell.n
        self.k = cell.k
        self.basis = cell_members(cell)
        self.index = {d: i for i, d in enumerate(self.basis)}
        self.dim = len(self.basis)

    def act_diagram(self, d: Diagram) -> list:
        mat = smat_zero(self.dim)
        for j, e in enumerate(self.basis):
            loops, strings, res = compose(d, e)
            if D.propagating(res) < self.k:
                continue
            mat[self.index[res]][j] = Scalar({(loops, strings): 1})
        return mat

    def act(self, x) -> list:
        x = as_element(x)
        out = smat_zero(self.dim)
        for d, c in x.terms.items():
            out = smat_add(out, smat_scale(self.act_diagram(d), c))
        return out


# -- dimensions and simple heads -------------------------------------------------------


def delta_dim(n: int, lam, brauer: bool = False) -> int:
    from .symmetric import hook_length_dim

    return half_count(n, sum(lam), brauer) * hook_length_dim(tuple(lam))


def labels(n: int, brauer: bool = False) -> list:
    from .symmetric import partitions

    out = []
    for k in range(n + 1):
        if brauer and (n - k) % 2:
            continue
        out.extend(partitions(k))
    return out


def simple_dims(n: int, delta, delta_prime) -> dict:
    """lambda -> rank of the evaluated Gram matrix (dimension of the simple head)."""
    delta, delta_prime = Fraction(delta), Fraction(delta_prime)
    out = {}
    for lam in labels(n):
        m = delta_module(n, lam)
        G = m.gram()
        if delta_prime == 0:
            G = smat_at_dp_zero(G)
        out[lam] = matrix_rank(smat_eval(G, delta, delta_prime))
    return out
