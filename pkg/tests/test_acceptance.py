"""Acceptance criteria, one test each; exact arithmetic throughout.

Run directly (``python3 tests/test_acceptance.py``) for the bare PASS/FAIL lines;
under pytest the same lines appear in the terminal summary.
"""

import itertools
import random
import sys
import time

import pytest

RESULTS: dict = {}

BUDGET = {1: 5, 2: 30, 3: 60, 4: 60, 5: 120, 6: 60, 7: 120, 8: 120, 9: 60, 10: 60, 11: 120, 12: 120, 13: 300}


def _record(num, fn):
    t = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - t
    ok = bool(ok) and secs < BUDGET[num]
    RESULTS[num] = (ok, secs, detail)
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({secs:.1f}s) {detail}")
    return ok, secs, detail


def c1():
    from pbrauer import diagram as D

    full = [len(D.enumerate_diagrams(n)) for n in range(1, 6)]
    brauer = [len(D.enumerate_diagrams(n, brauer_only=True)) for n in range(1, 5)]
    # involution recurrence I(m) = I(m-1) + (m-1) I(m-2)
    inv = [1, 1]
    for m in range(2, 11):
        inv.append(inv[-1] + (m - 1) * inv[-2])
    oracle = [inv[2 * n] for n in range(1, 6)]
    ok = full == oracle == [2, 10, 76, 764, 9496] and brauer == [1, 3, 15, 105]
    return ok, f"|R_n|={full} |B_n|={brauer}"


def c2():
    from pbrauer import diagram as D
    from pbrauer.algebra import Element

    def assoc(a, b, c):
        x, y, z = Element.of(a), Element.of(b), Element.of(c)
        return (x * y) * z == x * (y * z)

    ds = D.enumerate_diagrams(2)
    bad = sum(1 for a, b, c in itertools.product(ds, repeat=3) if not assoc(a, b, c))
    rng = random.Random(0)
    triples = [tuple(D.random_diagram(3, rng) for _ in range(3)) for _ in range(1000)]
    bad += sum(1 for t in triples if not assoc(*t))
    # mixed linear combinations with symbolic coefficients
    from pbrauer.scalar import DELTA, DELTA_PRIME_INV

    for _ in range(100):
        xs = [Element.of(D.random_diagram(3, rng), DELTA) + Element.of(D.random_diagram(3, rng), DELTA_PRIME_INV)
              for _ in range(3)]
        bad += (xs[0] * xs[1]) * xs[2] != xs[0] * (xs[1] * xs[2])
    return bad == 0, f"1000 + 1000 + 100 triples, {bad} failures"


def c3():
    from pbrauer.algebra import decorated_check

    r2 = decorated_check(2)
    r3 = decorated_check(3, samples=500, seed=0)
    law = [c.passed for r in (r2, r3) for c in r.checks if c.id == "decorated product law"]
    return all(law), f"{r2.data['pairs']} pairs at n=2, {r3.data['pairs']} at n=3"


def c4():
    from pbrauer.algebra import Element, multiply, parity_idempotents

    ok = True
    for n in range(5):
        e, o = parity_idempotents(n)
        ok &= e + o == Element.one(n)
        ok &= multiply(e, e) == e and multiply(o, o) == o
        ok &= multiply(e, o).is_zero() and multiply(o, e).is_zero()
    return ok, "n = 0..4"


def c5():
    from pbrauer.morita import (element_identities_check, even_truncation_check, membership_check,
                                odd_truncation_check)
    from pbrauer.params import random_points

    reps = [even_truncation_check(n) for n in range(4)]
    reps += [odd_truncation_check(n) for n in range(1, 5)]
    reps.append(element_identities_check(5, 2))
    pts = random_points(1, 3)
    reps += [membership_check(n, pts) for n in range(1, 4)]
    failed = [f"{r.name}/{c.id}" for r in reps for c in r.failures()]
    return not failed, f"{sum(len(r.checks) for r in reps)} checks" + (f", failed {failed[:3]}" if failed else "")


def c6():
    from pbrauer.algebra import presentation_check

    reps = [presentation_check(n) for n in range(1, 5)]
    return all(reps), f"{sum(len(r.checks) for r in reps)} relation instances, n <= 4"


def c7():
    from pbrauer import diagram as D
    from pbrauer.algebra import Element
    from pbrauer.cells import delta_module, labels, smat_mul

    sums = []
    for n in range(6):
        sums.append(sum(delta_module(n, lam).dim ** 2 for lam in labels(n)) == len(D.enumerate_diagrams(n)))
    rng = random.Random(7)
    bad = 0
    count = 0
    for n in range(1, 4):
        for lam in labels(n):
            m = delta_module(n, lam)
            for _ in range(200):
                a, b = D.random_diagram(n, rng), D.random_diagram(n, rng)
                bad += m.act(Element.of(a) * Element.of(b)) != smat_mul(m.act_diagram(a), m.act_diagram(b))
                count += 1
    return all(sums) and bad == 0, f"sum dim^2 ok for n<=5: {all(sums)}; module axiom {count} pairs, {bad} failures"


def c8():
    from pbrauer.cells import delta_module, labels
    from pbrauer.params import generic_points

    pts = generic_points(0, 2)
    bad = [(n, lam, pt) for pt in pts for n in range(4) for lam in labels(n)
           if delta_module(n, lam).gram_rank(*pt) != delta_module(n, lam).dim]
    return not bad, f"{len(pts)} points, n <= 3" + (f", deficient {bad[:3]}" if bad else "")


def c9():
    from pbrauer.cells import labels
    from pbrauer.params import generic_points
    from pbrauer.young import branching_sweep, restriction_check

    sweep = branching_sweep(6)
    pts = generic_points(2, 2)
    reps = [restriction_check(n, lam, pts) for n in range(1, 4) for lam in labels(n)]
    ok = sweep.passed and all(reps)
    return ok, f"{len(sweep.checks)} branching checks n <= 6, {sum(len(r.checks) for r in reps)} restriction checks"


def c10():
    from pbrauer.cells import labels
    from pbrauer.morita import specht_image_check

    reps = [specht_image_check(n, lam, side) for n in range(4) for lam in labels(n)
            for side in ("even", "odd") if not (side == "odd" and n == 0)]
    return all(reps), f"{len(reps)} (n, lambda, side) cases"


def c11():
    from pbrauer.cells import labels
    from pbrauer.degenerate import nilpotency_check, quotient_iso_check, layer_decomposition_check, valid_layers
    from pbrauer.symmetric import horizontal_strip, induced_multiplicity, partitions

    reps = [nilpotency_check(n) for n in range(1, 4)] + [quotient_iso_check(n) for n in range(4)]
    for n in range(5):
        for lam in labels(n):
            reps += [layer_decomposition_check(n, lam, l) for l in valid_layers(n, sum(lam))]
    pieri_bad = 0
    for k in range(7):
        for lam in partitions(k):
            for l in range(7 - k):
                for mu in partitions(k + l):
                    pieri_bad += induced_multiplicity(lam, l, mu) != int(horizontal_strip(lam, mu, l))
    ok = all(reps) and pieri_bad == 0
    return ok, f"{sum(len(r.checks) for r in reps)} checks, Pieri mismatches {pieri_bad}"


def c12():
    from fractions import Fraction

    from pbrauer.degenerate import delta_one_membership, rescale_iso_check

    reps = [rescale_iso_check(n, Fraction(3)) for n in range(1, 4)]
    reps.append(rescale_iso_check(2, Fraction(-2, 5)))
    reps += [delta_one_membership(n) for n in range(1, 5)]
    return all(reps), f"{sum(len(r.checks) for r in reps)} checks"


def c13():
    from pbrauer.schur_weyl import commutant_dim, commutation_check, homomorphism_check, injectivity_rank

    hom = homomorphism_check(2, 2)
    ranks = {mk: injectivity_rank(*mk) for mk in [(1, 1), (2, 2), (2, 3), (3, 3)]}
    comm = {mk: commutant_dim(*mk) for mk in [(1, 1), (2, 2), (2, 3)]}
    gens = [commutation_check(m, k) for m in range(1, 4) for k in range(1, 4)]
    ok = hom.passed and all(r[2] for r in ranks.values()) and all(c == r for c, r in comm.values()) and all(gens)
    return ok, f"ranks {[r[0] for r in ranks.values()]}, commutants {[c[0] for c in comm.values()]}"


CRITERIA = {1: c1, 2: c2, 3: c3, 4: c4, 5: c5, 6: c6, 7: c7, 8: c8, 9: c9, 10: c10, 11: c11, 12: c12, 13: c13}


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, secs, detail = _record(num, CRITERIA[num])
    assert ok, f"criterion {num} failed after {secs:.1f}s: {detail}"


if __name__ == "__main__":
    results = [_record(num, CRITERIA[num])[0] for num in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
