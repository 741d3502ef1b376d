import random

import pytest
from hypothesis import given, settings, strategies as st

from pbrauer import diagram as D
from pbrauer.algebra import (Element, basis_change, decorated, decorated_prediction, element_from_json,
                             element_to_json, from_decorated, ideal_membership, ideal_membership_bruteforce,
                             multiply, omega, parity_idempotents, presentation_check, product, to_decorated,
                             u_hat, u_hat_all, undecorate)
from pbrauer.scalar import DELTA, DELTA_PRIME, DELTA_PRIME_INV, ONE, Scalar

E1 = D.eps_generator(1, 1)


def test_generator_squares():
    e = Element.of(E1)
    assert e * e == e.scale(DELTA_PRIME)
    p = Element.of(D.pair_generator(2, 1))
    assert p * p == p.scale(DELTA)
    x = Element.of(D.transposition(3, 2), DELTA - 1)
    assert Element.one(3) * x == x == x * Element.one(3)


def test_u_hat():
    assert decorated(E1) == Element.of(E1)
    uh = Element.of(D.identity(1)) - Element.of(E1, DELTA_PRIME_INV)
    assert decorated(D.identity(1)) == uh == u_hat(1, 1)
    assert multiply(uh, uh) == uh
    assert u_hat_all(3) == decorated(D.identity(3))
    u = u_hat_all(3)
    for i in (1, 2, 3):
        assert multiply(u, u_hat(3, i)) == u == multiply(u_hat(3, i), u)


def test_decorated_law_examples():
    assert decorated_prediction(E1, D.identity(1)).is_zero()
    assert multiply(decorated(E1), decorated(D.identity(1))).is_zero()
    p = D.pair_generator(2, 1)
    assert multiply(decorated(p), decorated(p)) == decorated(p).scale(DELTA - 1)
    s = D.transposition(2, 1)
    assert multiply(decorated(s), decorated(s)) == decorated(D.identity(2))


def test_basis_change():
    assert basis_change(u_hat(1, 1)) == {D.identity(1): ONE}
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 3)
        x = Element.zero(n)
        for _ in range(3):
            x = x + Element.of(D.random_diagram(n, rng), Scalar({(rng.randint(0, 2), rng.randint(-1, 1)): rng.randint(1, 4)}))
        assert from_decorated(to_decorated(x), n) == x


def test_unitriangular():
    for n in range(4):
        for d in D.enumerate_diagrams(n):
            coeffs = to_decorated(Element.of(d))
            assert coeffs[d] == ONE
            assert all(D.defect(e) > D.defect(d) for e in coeffs if e != d)
            assert coeffs == undecorate(d)


def test_parity():
    for n in range(4):
        e, o = parity_idempotents(n)
        evens = [d for d in D.enumerate_diagrams(n) if D.is_even(d)]
        for d in evens:
            assert multiply(e, decorated(d)) == decorated(d)


def test_presentation_examples():
    e1, e2 = Element.of(D.eps_generator(2, 1)), Element.of(D.eps_generator(2, 2))
    s1 = Element.of(D.transposition(2, 1))
    p1 = Element.of(D.pair_generator(2, 1))
    assert product(e1, s1, e1) == e1 * e2
    assert product(p1, e1, p1) == p1.scale(DELTA_PRIME)
    s = [Element.of(D.transposition(3, i)) for i in (1, 2)]
    assert product(s[0], s[1], s[0]) == product(s[1], s[0], s[1])
    for n in range(1, 4):
        assert presentation_check(n).passed


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2 ** 32))
def test_star_reverses_products(n, seed):
    rng = random.Random(seed)
    x = Element.of(D.random_diagram(n, rng), DELTA) + Element.of(D.random_diagram(n, rng))
    y = Element.of(D.random_diagram(n, rng), DELTA_PRIME_INV)
    assert (x * y).star() == y.star() * x.star()


def test_membership_examples():
    assert ideal_membership(omega(2, [1, 2]), u_hat_all(2), 3, 1)
    assert ideal_membership(omega(2, [1]), omega(2, [1]), 3, 1)
    assert ideal_membership(omega(3, [1, 2]), u_hat_all(3), 1, 1)
    assert not ideal_membership(omega(2, [1, 2]), u_hat_all(2), 1, 1)
    with pytest.raises(ZeroDivisionError):
        ideal_membership(omega(2, [1]), u_hat_all(2), 2, 0)


@pytest.mark.parametrize("n,point", [(1, (3, 1)), (2, (3, 1)), (2, (1, 1)), (2, (2, 5)), (3, (1, 2))])
def test_membership_matches_bruteforce(n, point):
    seeds = [u_hat_all(n), omega(n, [1]), Element.of(D.eps_generator(n, 1))]
    for seed in seeds:
        for X in D.all_subsets(list(range(1, n + 1))):
            target = omega(n, X)
            assert ideal_membership(target, seed, *point) == ideal_membership_bruteforce(target, seed, *point)


def test_json_round_trip():
    x = u_hat_all(2) + Element.of(D.pair_generator(2, 1), DELTA - 3)
    assert element_from_json(element_to_json(x)) == x
