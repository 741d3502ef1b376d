"""Idempotent truncations to Brauer algebras.

Even side: u_hat_n R_n u_hat_n is B_n(d-1) with basis {<d> : d Brauer}.
Odd side: with omega = omega_{1} (so omega^2 = dp omega), the elements
dp^-1 <phi(d)>, phi(d) = (u u*) (x) d, multiply like d in B_{n-1}(d-1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import diagram as D
from .algebra import (Element, decorated, ideal_membership, multiply, omega, product,
                      to_decorated, u_hat_all)
from .cells import delta_module, labels, smat_eval
from .diagram import Diagram, compose_graph
from .linalg import Echelon, matrix_rank
from .params import GENERIC
from .report import Report
from .scalar import ONE, Scalar
from .symmetric import format_partition

D_MINUS_1 = Scalar({(1, 0): 1, (0, 0): -1})
DP = Scalar({(0, 1): 1})
DP_INV = Scalar({(0, -1): 1})


def phi(d: Diagram) -> Diagram:
    return D.tensor(D.u_set(1, [1]), d)


def brauer_structure(d: Diagram, d2: Diagram) -> tuple:
    """Product in B_n(t) by the component routine: (t-exponent, diagram)."""
    loops, strings, res = compose_graph(d, d2)
    if strings:
        raise AssertionError("strings in a Brauer product")
    return loops, res


def _nonzero_sandwich(e: Element, d: Diagram) -> bool:
    return not product(e, d, e).is_zero()


def _independent(elements, point=GENERIC) -> int:
    basis = {}
    ech = Echelon()
    for x in elements:
        v = x.evaluate(*point)
        ech.add({basis.setdefault(d, len(basis)): c for d, c in v.items()})
    return ech.rank


def even_truncation_check(n: int, products: bool = True) -> Report:
    rep = Report("even-truncation", {"n": n})
    u = u_hat_all(n)
    brauer = D.enumerate_diagrams(n, brauer_only=True)
    bad = [d for d in D.enumerate_diagrams(n) if _nonzero_sandwich(u, d) != D.is_brauer(d)]
    rep.add("u d u nonzero iff d Brauer", not bad, [str(d) for d in bad[:5]] or None)
    bad = [d for d in D.enumerate_diagrams(n) if _nonzero_sandwich(u, decorated(d)) != D.is_brauer(d)]
    rep.add("u <d> u nonzero iff d Brauer", not bad, [str(d) for d in bad[:5]] or None)
    bad = [d for d in brauer if product(u, d, u) != decorated(d)]
    rep.add("u d u = <d> on Brauer diagrams", not bad, [str(d) for d in bad[:5]] or None)
    r = _independent([decorated(d) for d in brauer])
    rep.add("basis size", r == len(brauer) == D.double_factorial(2 * n - 1), {"rank": r, "expected": len(brauer)})
    if products:
        mism = []
        for d, d2 in itertools.product(brauer, repeat=2):
            coeffs = to_decorated(multiply(decorated(d), decorated(d2)))
            loops, res = brauer_structure(d, d2)
            if coeffs != {res: D_MINUS_1 ** loops}:
                mism.append(f"{d} * {d2}")
        rep.add("structure constants match B_n(d-1)", not mism, mism[:5] or None)
        rep.data["products"] = len(brauer) ** 2
    rep.data["basis"] = len(brauer)
    return rep


def odd_truncation_check(n: int, products: bool = True) -> Report:
    if n < 1:
        raise ValueError("odd truncation needs n >= 1")
    rep = Report("odd-truncation", {"n": n})
    w = omega(n, [1])
    rep.add("omega^2 = dp omega", multiply(w, w) == w.scale(DP))
    low = D.enumerate_diagrams(n - 1, brauer_only=True)
    image = {phi(d) for d in low}
    # the criterion concerns decorated diagrams; a plain d can survive (omega 1 omega = dp omega)
    bad = [d for d in D.enumerate_diagrams(n) if _nonzero_sandwich(w, decorated(d)) != (d in image)]
    rep.add("omega <d> omega nonzero iff d in phi(B_{n-1})", not bad, [str(d) for d in bad[:5]] or None)
    rep.data["plain survivors outside phi(B_{n-1})"] = sum(
        1 for d in D.enumerate_diagrams(n) if d not in image and _nonzero_sandwich(w, d))
    bad = [d for d in low if product(w, phi(d), w) != decorated(phi(d)).scale(DP ** 2)]
    rep.add("omega phi(d) omega = dp^2 <phi(d)>", not bad, [str(d) for d in bad[:5]] or None)
    r = _independent([decorated(phi(d)) for d in low])
    expect = D.double_factorial(2 * (n - 1) - 1)
    rep.add("basis size", r == len(low) == expect, {"rank": r, "expected": expect})
    if products:
        mism = []
        for d, d2 in itertools.product(low, repeat=2):
            x = decorated(phi(d)).scale(DP_INV)
            y = decorated(phi(d2)).scale(DP_INV)
            coeffs = to_decorated(multiply(x, y))
            loops, res = brauer_structure(d, d2)
            if coeffs != {phi(res): D_MINUS_1 ** loops * DP_INV}:
                mism.append(f"{d} * {d2}")
        rep.add("structure constants match B_{n-1}(d-1)", not mism, mism[:5] or None)
    rep.data["basis"] = len(low)
    return rep


def surviving_counts(n: int) -> tuple:
    """Diagrams surviving the even and odd sandwiches."""
    u = u_hat_all(n)
    ds = D.enumerate_diagrams(n)
    even = sum(1 for d in ds if _nonzero_sandwich(u, decorated(d)))
    if not n:
        return even, 0
    w = omega(n, [1])
    odd = sum(1 for d in ds if _nonzero_sandwich(w, decorated(d)))
    return even, odd


# -- element identities -------------------------------------------------------------


def sandwich_x(n: int, k: int, odd: bool = False) -> Diagram:
    """(u u vu*)^k 1^(n-2k), with u u* in front for the odd variant."""
    word = (["u", "u*"] if odd else []) + ["u", "u", "vu*"] * k
    rest = n - 2 * k - (1 if odd else 0)
    if rest < 0:
        raise ValueError("k too large for n")
    return D.stack(word + ["1"] * rest)


def element_identities_check(n_max: int = 5, k_max: int = 2) -> Report:
    rep = Report("element-identities", {"n_max": n_max, "k_max": k_max})
    for n in range(1, n_max + 1):
        u = u_hat_all(n)
        for k in range(0, k_max + 1):
            if 2 * k <= n:
                x = sandwich_x(n, k)
                lhs = omega(n, range(1, 2 * k + 1)).scale(D_MINUS_1 ** k)
                rhs = product(decorated(x), u, decorated(D.star(x)))
                rep.add(f"even n={n} k={k}", lhs == rhs)
            if 2 * k + 1 <= n:
                x = sandwich_x(n, k, odd=True)
                lhs = omega(n, range(1, 2 * k + 2)).scale(DP ** 2 * D_MINUS_1 ** k)
                rhs = product(decorated(x), omega(n, [1]), decorated(D.star(x)))
                rep.add(f"odd n={n} k={k}", lhs == rhs)
    return rep


# -- Specht images --------------------------------------------------------------------


def specht_image_check(n: int, lam, side: str, point=GENERIC) -> Report:
    """Truncated Delta(n, lam) has the Brauer Specht dimension and character."""
    lam = tuple(lam)
    rep = Report("specht-image", {"n": n, "lambda": format_partition(lam), "side": side})
    delta, dp = point
    m = delta_module(n, lam)
    if side == "even":
        e = u_hat_all(n)
        target_n = n
        brauer = D.enumerate_diagrams(n, brauer_only=True)
        lift = decorated
    elif side == "odd":
        if n < 1:
            raise ValueError("odd side needs n >= 1")
        e = omega(n, [1]).scale(DP_INV)
        target_n = n - 1
        brauer = D.enumerate_diagrams(n - 1, brauer_only=True)

        def lift(d):
            return decorated(phi(d)).scale(DP_INV)
    else:
        raise ValueError(f"side must be even or odd, not {side!r}")
    r = matrix_rank(smat_eval(m.act(e), delta, dp))
    ok_parity = (target_n - sum(lam)) % 2 == 0 and sum(lam) <= target_n
    expect = delta_module(target_n, lam, brauer=True).dim if ok_parity else 0
    rep.add("dimension", r == expect, {"rank": r, "brauer_dim": expect})
    if ok_parity:
        mb = delta_module(target_n, lam, brauer=True)
        bad = 0
        for d in brauer:
            A = smat_eval(m.act(lift(d)), delta, dp)
            B = smat_eval(mb.act_diagram(d), delta - 1, dp)
            if _tr(A) != _tr(B):
                bad += 1
        rep.add("characters match Delta^B at d-1", bad == 0, {"mismatches": bad})
    return rep


def _tr(M) -> Fraction:
    return sum((M[i][i] for i in range(len(M))), Fraction(0))


# -- trace ideals ---------------------------------------------------------------------


def membership_check(n: int, points) -> Report:
    """omega_X in R u_hat R for |X| even, in R omega R for |X| odd."""
    rep = Report("membership", {"n": n})
    u = u_hat_all(n)
    w = omega(n, [1]) if n else None
    for delta, dp in points:
        for r in range(n + 1):
            for X in itertools.combinations(range(1, n + 1), r):
                gen = u if r % 2 == 0 else w
                side = "u_hat" if r % 2 == 0 else "omega"
                ok = ideal_membership(omega(n, X), gen, delta, dp)
                rep.add(f"omega_{set(X) or '{}'} in R {side} R at ({delta},{dp})", ok)
        if n:
            one_e_in = _parity_identity_in_ideal(n, u, delta, dp, even=True)
            rep.add(f"1_e in R u_hat R at ({delta},{dp})", one_e_in)
            rep.add(f"1_o in R omega R at ({delta},{dp})", _parity_identity_in_ideal(n, w, delta, dp, even=False))
    return rep


def _parity_identity_in_ideal(n, gen, delta, dp, even: bool) -> bool:
    from .algebra import parity_idempotents

    one_e, one_o = parity_idempotents(n)
    return ideal_membership(one_e if even else one_o, gen, delta, dp)


def morita_suite(n: int, points, products: bool = True) -> Report:
    rep = Report("morita", {"n": n})
    rep.extend(even_truncation_check(n, products))
    if n >= 1:
        rep.extend(odd_truncation_check(n, products))
    rep.extend(membership_check(n, points))
    for lam in labels(n):
        for side in ("even", "odd"):
            if side == "odd" and n < 1:
                continue
            rep.extend(specht_image_check(n, lam, side), f"specht-image {side} {format_partition(lam)}")
    even, odd = surviving_counts(n)
    rep.add("surviving diagrams", (even, odd) == (D.double_factorial(2 * n - 1),
                                                  D.double_factorial(2 * n - 3) if n else 0),
            {"even": even, "odd": odd})
    return rep
