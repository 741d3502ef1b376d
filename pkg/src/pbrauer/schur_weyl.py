"""Tensor-space action of R_m(k+1, 1) on (C + C^k)^(x m) and its commutant.

Basis vectors are multi-indices (j_1..j_m) over {0..k}; 0 is the extra
direction e_0 killed by singletons.  Matrices are integer numpy arrays.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import diagram as D
from .algebra import relation_instances
from .diagram import Diagram, compose
from .kernels import psi_matrix
from .linalg import Echelon
from .report import Report
from .scalar import evaluate

MAX_DIM = 5000


def psi(d: Diagram, m: int | None = None, k: int = 1) -> np.ndarray:
    m = d.n if m is None else m
    if d.n != m:
        raise ValueError(f"diagram has rank {d.n}, expected {m}")
    if (k + 1) ** m > MAX_DIM:
        raise ValueError(f"(k+1)^m = {(k + 1) ** m} exceeds {MAX_DIM}")
    return psi_matrix(d.p, m, k)


def generator_matrices(m: int, k: int) -> dict:
    out = {}
    for i in range(1, m):
        out[f"s{i}"] = psi(D.transposition(m, i), m, k)
        out[f"p{i}"] = psi(D.pair_generator(m, i), m, k)
    for i in range(1, m + 1):
        out[f"e{i}"] = psi(D.eps_generator(m, i), m, k)
    return out


def _word_matrix(word, mats, dim) -> np.ndarray:
    out = np.eye(dim, dtype=np.int64)
    for g in word:
        out = out @ mats[g]
    return out


def homomorphism_check(m: int, k: int, samples: int = 2000, seed: int = 0) -> Report:
    """psi(a) psi(b) = c(k+1, 1) psi(a o b), plus every relation on matrices."""
    import random

    rep = Report("homomorphism", {"m": m, "k": k})
    delta = k + 1
    ds = D.enumerate_diagrams(m)
    if m <= 2:
        pairs = list(itertools.product(ds, repeat=2))
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(ds), rng.choice(ds)) for _ in range(samples)]
    cache = {}

    def mat(d):
        if d not in cache:
            cache[d] = psi(d, m, k)
        return cache[d]

    bad = []
    for a, b in pairs:
        loops, _, res = compose(a, b)
        if not np.array_equal(mat(a) @ mat(b), delta ** loops * mat(res)):
            bad.append(f"{a} . {b}")
    rep.add("psi(a) psi(b) = d^loops psi(a o b)", not bad, bad[:5] or None)
    rep.data["pairs"] = len(pairs)
    mats = generator_matrices(m, k)
    dim = (k + 1) ** m
    for label, lw, c, rw in relation_instances(m):
        cv = evaluate(c, delta, 1)
        lhs = _word_matrix(lw, mats, dim)
        rhs = _word_matrix(rw, mats, dim)
        rep.add(f"relation {label}", cv.denominator == 1 and np.array_equal(lhs, int(cv) * rhs))
    bad = [str(d) for d in ds if not np.array_equal(mat(D.star(d)), mat(d).T)] if m <= 3 else []
    rep.add("psi(d*) = psi(d)^t", not bad, bad[:5] or None)
    return rep


def _sparse(vec) -> dict:
    nz = np.flatnonzero(vec)
    return {int(i): int(vec[i]) for i in nz}


def injectivity_rank(m: int, k: int) -> tuple:
    ech = Echelon()
    ds = D.enumerate_diagrams(m)
    for d in ds:
        ech.add(_sparse(psi(d, m, k).ravel()))
    return ech.rank, len(ds), ech.rank == len(ds)


def orthogonal_generators(m: int, k: int) -> list:
    """Leibniz actions of E_ab - E_ba (1 <= a < b <= k) and the reflection diag(1,-1,1..)."""
    base = k + 1
    eye = np.eye(base, dtype=np.int64)
    gens = []
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            A = np.zeros((base, base), dtype=np.int64)
            A[a, b], A[b, a] = 1, -1
            total = np.zeros((base ** m, base ** m), dtype=np.int64)
            for s in range(m):
                term = np.ones((1, 1), dtype=np.int64)
                for t in range(m):
                    term = np.kron(term, A if t == s else eye)
                total += term
            gens.append(total)
    r = np.eye(base, dtype=np.int64)
    r[1, 1] = -1
    R = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        R = np.kron(R, r)
    gens.append(R)
    return gens


def commutation_check(m: int, k: int) -> Report:
    rep = Report("commutation", {"m": m, "k": k})
    gens = orthogonal_generators(m, k)
    bad = []
    for d in D.enumerate_diagrams(m):
        P = psi(d, m, k)
        if any(not np.array_equal(P @ g, g @ P) for g in gens):
            bad.append(str(d))
    rep.add("psi(d) commutes with O_k generators", not bad, bad[:5] or None)
    return rep


def commutant_dim(m: int, k: int) -> tuple:
    """Nullity of [X, g] = 0 over the O_k generators, and the psi-rank."""
    dim = (k + 1) ** m
    if dim * dim > 5000:
        raise ValueError(f"commutant system with {dim * dim} unknowns is too large")
    ech = Echelon()
    for g in orthogonal_generators(m, k):
        nz = [np.flatnonzero(g[:, c]) for c in range(dim)]
        nzr = [np.flatnonzero(g[r, :]) for r in range(dim)]
        for r in range(dim):
            for c in range(dim):
                # (X g - g X)[r, c]; unknown X[a, b] has index a*dim + b
                row: dict = {}
                for t in nz[c]:
                    key = r * dim + int(t)
                    row[key] = row.get(key, 0) + int(g[t, c])
                for t in nzr[r]:
                    key = int(t) * dim + c
                    row[key] = row.get(key, 0) - int(g[r, t])
                row = {a: v for a, v in row.items() if v}
                if row:
                    ech.add(row)
    rank = injectivity_rank(m, k)[0]
    return dim * dim - ech.rank, rank


def schur_weyl_summary(m: int, k: int, skip_commutant: bool = False) -> dict:
    rank, expected, injective = injectivity_rank(m, k)
    out = {"m": m, "k": k, "rank": rank, "expected": expected, "injective": injective,
           "commutant_dim": None}
    if not skip_commutant:
        out["commutant_dim"] = commutant_dim(m, k)[0]
    return out


def schur_weyl_suite(m: int, k: int, skip_commutant: bool = False) -> Report:
    rep = Report("schur-weyl", {"m": m, "k": k})
    rep.extend(homomorphism_check(m, k))
    rep.extend(commutation_check(m, k))
    s = schur_weyl_summary(m, k, skip_commutant)
    if m <= k:
        rep.add("psi injective", s["injective"], {"rank": s["rank"], "expected": s["expected"]})
        if s["commutant_dim"] is not None:
            rep.add("commutant = image", s["commutant_dim"] == s["rank"],
                    {"commutant_dim": s["commutant_dim"], "rank": s["rank"]})
    rep.data.update(s)
    return rep
