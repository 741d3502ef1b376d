"""Degenerate parameters: dp = 0 (nilpotent ideal, Brauer quotient, singleton
filtration of cell modules) and d = 1 (rescaling, trace ideals)."""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import diagram as D
from .algebra import (decorated, ideal_membership, multiply, omega, relation_instances,
                      evaluate_word, generators, u_hat_all)
from .cells import delta_module, labels, smat_at_dp_zero, smat_transpose
from .diagram import Diagram, compose, compose_graph
from .report import Report
from .scalar import ZERO, Scalar, evaluate
from .symmetric import format_partition, horizontal_strip, induced_multiplicity, partitions

DP = Scalar({(0, 1): 1})

# -- dp = 0 ---------------------------------------------------------------------


def product_at_dp0(a: Diagram, b: Diagram):
    """``(loops, diagram)`` or None when an open string kills the product."""
    loops, strings, res = compose(a, b)
    if strings:
        return None
    return loops, res


def ideal_power_sets(n: int, upto: int) -> list:
    """Diagram sets spanning I, I^2, ..., I^upto at dp = 0 (d symbolic)."""
    base = [d for d in D.enumerate_diagrams(n) if not D.is_brauer(d)]
    powers = [set(base)]
    while len(powers) < upto:
        nxt = set()
        for a in powers[-1]:
            for b in base:
                r = product_at_dp0(a, b)
                if r is not None:
                    nxt.add(r[1])
        powers.append(nxt)
    return powers


def nilpotency_check(n: int) -> Report:
    rep = Report("nilpotency", {"n": n})
    ds = D.enumerate_diagrams(n)
    ideal = [d for d in ds if not D.is_brauer(d)]
    leaks = []
    for x in ds:
        for d in ideal:
            for r in (product_at_dp0(x, d), product_at_dp0(d, x)):
                if r is not None and D.is_brauer(r[1]):
                    leaks.append(f"{x} . {d}")
    rep.add("I is a two-sided ideal", not leaks, leaks[:5] or None)
    if n == 0:
        rep.add("I = 0", not ideal)
        return rep
    powers = ideal_power_sets(n, n + 1)
    sizes = [len(p) for p in powers]
    rep.add("I^(n+1) = 0", sizes[n] == 0, {"dims": sizes})
    rep.add("I^n != 0", sizes[n - 1] > 0, {"dims": sizes})
    return rep


def quotient_iso_check(n: int) -> Report:
    """Brauer products at dp = 0 modulo I reproduce B_n(d) (parameter d, not d-1)."""
    rep = Report("quotient", {"n": n})
    brauer = D.enumerate_diagrams(n, brauer_only=True)
    mism = []
    for a, b in itertools.product(brauer, repeat=2):
        r = product_at_dp0(a, b)
        loops, strings, res = compose_graph(a, b)
        if r is None or r != (loops, res) or not D.is_brauer(res):
            mism.append(f"{a} . {b}")
    rep.add("Brauer products match B_n(d)", not mism, mism[:5] or None)
    # the quotient map kills everything touching I
    ds = D.enumerate_diagrams(n)
    leaks = []
    for a in ds:
        for b in ds:
            if D.is_brauer(a) and D.is_brauer(b):
                continue
            r = product_at_dp0(a, b)
            if r is not None and D.is_brauer(r[1]):
                leaks.append(f"{a} . {b}")
    rep.add("products involving I stay in I", not leaks, leaks[:5] or None)
    return rep


def layers(n: int, lam) -> dict:
    """l -> basis indices of Delta(n, lam) whose half diagram has l singletons."""
    m = delta_module(n, tuple(lam))
    out: dict = {}
    for i, (h, _) in enumerate(m.basis):
        out.setdefault(len(h.singletons()), []).append(i)
    return out


def layer_decomposition_check(n: int, lam, l: int) -> Report:
    """N_l(lam) against sum of m_mu Delta^B(n, mu), mu/lam a horizontal l-strip."""
    lam = tuple(lam)
    k = sum(lam)
    rep = Report("layer-decomposition", {"n": n, "lambda": format_partition(lam), "l": l})
    if l < 0 or l > n - k or (n - k - l) % 2:
        raise ValueError(f"layer l={l} is not valid for n={n}, |lambda|={k}")
    m = delta_module(n, lam)
    lay = layers(n, lam)
    idx = lay.get(l, [])
    mus = [mu for mu in partitions(k + l) if horizontal_strip(lam, mu, l)]
    mult = {mu: induced_multiplicity(lam, l, mu) for mu in partitions(k + l)}
    rep.add("Pieri agrees with characters",
            all((mult[mu] == 1) == (mu in mus) and mult[mu] in (0, 1) for mu in mult))
    expect = sum(delta_module(n, mu, brauer=True).dim for mu in mus)
    rep.add("dimension", len(idx) == expect, {"layer": len(idx), "sum": expect,
                                              "mu": [format_partition(mu) for mu in mus]})
    # invariance of C^(>=l) and characters of the layer, symbolic in d at dp = 0
    above = [i for ll, ii in lay.items() if ll >= l for i in ii]
    inside = set(above)
    inv_ok = True
    for d in D.enumerate_diagrams(n):
        M = smat_at_dp_zero(m.act_diagram(d))
        if any(M[i][j] for j in above for i in range(m.dim) if i not in inside):
            inv_ok = False
            break
    rep.add("C^(l) is a submodule at dp=0", inv_ok)
    bad = 0
    for d in D.enumerate_diagrams(n, brauer_only=True):
        M = smat_at_dp_zero(m.act_diagram(d))
        tr = sum((M[i][i] for i in idx), ZERO)
        want = ZERO
        for mu in mus:
            B = delta_module(n, mu, brauer=True).act_diagram(d)
            want = want + sum((B[i][i] for i in range(len(B))), ZERO)
        if tr != want:
            bad += 1
    rep.add("layer characters match", bad == 0, {"mismatches": bad})
    return rep


def valid_layers(n: int, k: int) -> list:
    return list(range(n - k, -1, -2))


def dp0_suite(n: int) -> Report:
    rep = Report("degenerate-dp0", {"n": n})
    rep.extend(nilpotency_check(n))
    rep.extend(quotient_iso_check(n))
    for lam in labels(n):
        for l in valid_layers(n, sum(lam)):
            rep.extend(layer_decomposition_check(n, lam, l), f"layers {format_partition(lam)} l={l}")
        m = delta_module(n, lam)
        G = m.gram()
        rep.add(f"gram in Z[d] at dp=0 {format_partition(lam)}",
                all(c.min_dp_power() >= 0 for row in G for c in row))
        lay = layers(n, lam)
        rep.add(f"layers partition the basis {format_partition(lam)}",
                sum(len(v) for v in lay.values()) == m.dim)
    return rep


# -- d = 1 ------------------------------------------------------------------------------


def rescale(d: Diagram) -> Scalar:
    """Factor dp^(-singletons/2) attached to d by the rescaling map."""
    s = D.defect(d)
    if s % 2:
        raise AssertionError("odd number of singletons")
    return Scalar({(0, -(s // 2)): 1})


def rescale_iso_check(n: int, delta_prime) -> Report:
    dp = Fraction(delta_prime)
    if dp == 0:
        raise ZeroDivisionError("requires δ′ invertible")
    rep = Report("rescale", {"n": n, "delta_prime": str(dp)})
    gens = generators(n)
    scaled = {g: (x.scale(Scalar({(0, -1): 1})) if g.startswith("e") else x) for g, x in gens.items()}
    for label, lw, c, rw in relation_instances(n):
        lhs = evaluate_word(lw, n, scaled).evaluate(1, dp)
        rhs = evaluate_word(rw, n, scaled).evaluate(1, dp)
        c11 = evaluate(c, 1, 1)
        rhs = {d: v * c11 for d, v in rhs.items() if v * c11}
        rep.add(f"relation {label}", lhs == rhs)
    mism = []
    ds = D.enumerate_diagrams(n)
    for a, b in itertools.product(ds, repeat=2):
        loops, strings, res = compose(a, b)
        # images multiplied in R(1, dp) versus image of the product in R(1,1)
        left = evaluate(rescale(a) * rescale(b), 1, dp) * dp ** strings
        right = evaluate(rescale(res), 1, dp)
        if left != right:
            mism.append(f"{a} . {b}")
    rep.add("basis map intertwines products", not mism, mism[:5] or None)
    return rep


def certificate_pair(n: int, k: int, odd: bool = False) -> tuple:
    """Diagrams a, b with <a> u_hat <b> = omega_{1..2k} when delta = 1.

    ``a`` chains the unprimed singletons 1..2k past one propagating line;
    needs 2k < n (odd variant: 2k+1 < n, shifted by u u*).
    """
    shift = 1 if odd else 0
    m = n - shift
    if 2 * k >= m:
        raise ValueError("need a spare line beyond the singletons")
    ablocks = [(j,) for j in range(1, 2 * k + 1)] + [(2 * k + 1, -1)]
    ablocks += [(-(2 * j), -(2 * j + 1)) for j in range(1, k + 1)]
    bblocks = [(2 * j - 1, 2 * j) for j in range(1, k + 1)] + [(2 * k + 1, -(2 * k + 1))]
    bblocks += [(-j,) for j in range(1, 2 * k + 1)]
    for j in range(2 * k + 2, m + 1):
        ablocks.append((j, -j))
        bblocks.append((j, -j))
    a = D.Diagram.from_blocks(m, ablocks)
    b = D.Diagram.from_blocks(m, bblocks)
    if odd:
        uu = D.u_set(1, [1])
        a, b = D.tensor(uu, a), D.tensor(uu, b)
    return a, b


def delta_one_membership(n: int, k: int | None = None) -> Report:
    """omega_{1..2k} in R u_hat R (n odd) or omega_{1..2k+1} in R omega R (n even) at d = dp = 1."""
    rep = Report("delta-one-membership", {"n": n})
    ks = [k] if k is not None else None
    if n % 2 == 1:
        u = u_hat_all(n)
        for kk in ks or range(0, (n - 1) // 2 + 1):
            X = range(1, 2 * kk + 1)
            rep.add(f"omega_{{1..{2 * kk}}} in R u_hat R", ideal_membership(omega(n, X), u, 1, 1))
            a, b = certificate_pair(n, kk)
            cert = multiply(multiply(decorated(a), u), decorated(b))
            rep.add(f"certificate <a> u_hat <b> = omega_{{1..{2 * kk}}}", cert == omega(n, X))
    elif n >= 2:
        w = omega(n, [1])
        for kk in ks or range(0, (n - 2) // 2 + 1):
            X = range(1, 2 * kk + 2)
            rep.add(f"omega_{{1..{2 * kk + 1}}} in R omega R", ideal_membership(omega(n, X), w, 1, 1))
            if kk > 0:
                a, b = certificate_pair(n, kk, odd=True)
                cert = multiply(multiply(decorated(a), w), decorated(b))
                rep.add(f"certificate <a> omega <b> = dp^2 omega_{{1..{2 * kk + 1}}}",
                        cert == omega(n, X).scale(DP ** 2))
    if n >= 1:
        # the excluded case: the top omega is not reached at d = 1
        top = omega(n, range(1, n + 1))
        gen = u_hat_all(n) if n % 2 == 0 else omega(n, [1])
        rep.data["omega_{1..n} in the parity ideal at (1,1)"] = ideal_membership(top, gen, 1, 1)
    return rep


def gram_symmetry_check(n: int) -> Report:
    rep = Report("gram-symmetry", {"n": n})
    for lam in labels(n):
        G = delta_module(n, lam).gram()
        rep.add(f"G = G^t {format_partition(lam)}", G == smat_transpose(G))
    return rep


def d1_suite(n: int, delta_prime=Fraction(3)) -> Report:
    rep = Report("degenerate-d1", {"n": n})
    rep.extend(rescale_iso_check(n, delta_prime))
    rep.extend(delta_one_membership(n))
    rep.extend(gram_symmetry_check(n))
    return rep
