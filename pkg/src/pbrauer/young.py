"""Young graph incidence matrix and the branching of Delta(n, lambda)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import diagram as D
from .algebra import Element
from .cells import delta_dim, delta_module, labels, smat_eval
from .report import Report
from .symmetric import branch_arrows, format_partition, partitions_upto


class YoungMatrix:
    """M[mu][lam] = 1 iff lam is mu plus one node, for weights <= bound."""

    def __init__(self, bound: int):
        self.bound = bound
        self.parts = partitions_upto(bound)
        self.index = {p: i for i, p in enumerate(self.parts)}
        N = len(self.parts)
        M = np.zeros((N, N), dtype=object)
        M[:, :] = 0
        for mu in self.parts:
            for lam in branch_arrows(mu, "up"):
                if lam in self.index:
                    M[self.index[mu], self.index[lam]] = 1
        self.M = M

    def walk_matrix(self):
        N = len(self.parts)
        eye = np.zeros((N, N), dtype=object)
        eye[:, :] = 0
        for i in range(N):
            eye[i, i] = 1
        return self.M + self.M.T + eye

    def power_row(self, n: int):
        """Row of the empty partition in (M + M^t + 1)^n."""
        A = self.walk_matrix()
        row = np.zeros(len(self.parts), dtype=object)
        row[:] = 0
        row[self.index[()]] = 1
        for _ in range(n):
            row = row.dot(A)
        return row


def dim_via_matrix(n: int, lam, bound: int | None = None) -> int:
    lam = tuple(lam)
    if sum(lam) > n:
        return 0
    ym = YoungMatrix(n if bound is None else bound)
    return int(ym.power_row(n)[ym.index[lam]])


def dims_table(n: int) -> dict:
    ym = YoungMatrix(n)
    row = ym.power_row(n)
    return {p: int(row[ym.index[p]]) for p in ym.parts}


def _dim(n: int, lam) -> int:
    if n < 0 or sum(lam) > n:
        return 0
    return delta_dim(n, lam)


def branching_check(n: int, lam) -> Report:
    """dim Delta(n,lam) = dim Delta(n-1,lam) + sum_{mu->lam} + sum_{lam->mu}."""
    lam = tuple(lam)
    rep = Report("branching", {"n": n, "lambda": format_partition(lam)})
    total = _dim(n, lam)
    sub = _dim(n - 1, lam)
    middle = sum(_dim(n - 1, mu) for mu in branch_arrows(lam, "down")) if lam else 0
    top = sum(_dim(n - 1, mu) for mu in branch_arrows(lam, "up"))
    rep.add("dimension", total == sub + middle + top, {"dim": total, "sub": sub, "middle": middle, "quotient": top})
    rep.add("young-matrix", dim_via_matrix(n, lam) == total, {"matrix": dim_via_matrix(n, lam), "dim": total})
    return rep


# -- restriction layers ----------------------------------------------------------


def embed(d: D.Diagram) -> D.Diagram:
    """R_{n-1} -> R_n, d -> d (x) 1."""
    return D.tensor(d, D.identity(1))


def restriction_layers(n: int, lam) -> tuple:
    """Basis indices where n is a singleton, propagating, or paired."""
    m = delta_module(n, tuple(lam))
    single, prop, paired = [], [], []
    for i, (h, _) in enumerate(m.basis):
        if (n,) in h.left_blocks:
            single.append(i)
        elif n in h.prop:
            prop.append(i)
        else:
            paired.append(i)
    return single, prop, paired


def _invariant(M, inside) -> bool:
    S = set(inside)
    return all(not M[i][j] for j in S for i in range(len(M)) if i not in S)


def _block_trace(M, idx) -> Fraction:
    return sum((M[i][i] for i in idx), Fraction(0))


def _trace(m, x, delta, delta_prime) -> Fraction:
    if m.dim == 0:
        return Fraction(0)
    M = smat_eval(m.act(x), delta, delta_prime)
    return sum((M[i][i] for i in range(m.dim)), Fraction(0))


def restriction_check(n: int, lam, points) -> Report:
    """Sub-module invariance and layer characters under the embedded R_{n-1}.

    The singleton-n span is invariant and affords Delta(n-1, lam); adding the
    propagating-n span gives another invariant subspace whose layer affords
    the sum over mu -> lam; the remaining layer affords the sum over lam -> mu.
    Characters are compared on every diagram of R_{n-1}.
    """
    lam = tuple(lam)
    rep = Report("restriction", {"n": n, "lambda": format_partition(lam)})
    m = delta_module(n, lam)
    single, prop, paired = restriction_layers(n, lam)
    low = D.enumerate_diagrams(n - 1)
    down = [mu for mu in branch_arrows(lam, "down") if lam] if lam else []
    up = [mu for mu in branch_arrows(lam, "up") if sum(mu) <= n - 1]
    subs = {"sub": (lam,) if sum(lam) <= n - 1 else (), "middle": tuple(down), "quotient": tuple(up)}
    for delta, dp in points:
        ok_sub = ok_mid = True
        trace_ok = True
        for d in low:
            M = smat_eval(m.act_diagram(embed(d)), delta, dp)
            ok_sub &= _invariant(M, single)
            ok_mid &= _invariant(M, single + prop)
            x = Element.of(d)
            for name, idx in (("sub", single), ("middle", prop), ("quotient", paired)):
                expect = sum((_trace(delta_module(n - 1, mu), x, delta, dp) for mu in subs[name]), Fraction(0))
                if _block_trace(M, idx) != expect:
                    trace_ok = False
        tag = f"({delta},{dp})"
        rep.add(f"singleton-span invariant {tag}", ok_sub)
        rep.add(f"singleton+propagating span invariant {tag}", ok_mid)
        rep.add(f"layer characters {tag}", trace_ok)
    rep.add("layer dimensions",
            len(single) == _dim(n - 1, lam)
            and len(prop) == sum(_dim(n - 1, mu) for mu in subs["middle"])
            and len(paired) == sum(_dim(n - 1, mu) for mu in subs["quotient"]),
            {"single": len(single), "prop": len(prop), "paired": len(paired)})
    return rep


def branching_sweep(n_max: int) -> Report:
    rep = Report("branching-sweep", {"n_max": n_max})
    for n in range(1, n_max + 1):
        for lam in labels(n):
            rep.extend(branching_check(n, lam), f"n={n} {format_partition(lam)}")
    return rep
