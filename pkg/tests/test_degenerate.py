from fractions import Fraction

import pytest

from pbrauer import diagram as D
from pbrauer.algebra import Element, multiply, omega
from pbrauer.degenerate import (certificate_pair, d1_suite, delta_one_membership, gram_symmetry_check,
                                ideal_power_sets, layers, nilpotency_check, product_at_dp0, quotient_iso_check,
                                rescale_iso_check, layer_decomposition_check, valid_layers)
from pbrauer.algebra import decorated, u_hat_all
from pbrauer.cells import labels


def test_ideal_powers():
    assert [len(s) for s in ideal_power_sets(1, 2)] == [1, 0]
    sizes = [len(s) for s in ideal_power_sets(2, 3)]
    assert sizes[1] > 0 and sizes[2] == 0
    for n in range(4):
        assert nilpotency_check(n).passed


def test_quotient():
    p = D.pair_generator(2, 1)
    assert product_at_dp0(p, p) == (1, p)
    s = D.transposition(2, 1)
    assert product_at_dp0(s, s) == (0, D.identity(2))
    e = D.eps_generator(1, 1)
    assert product_at_dp0(e, e) is None
    assert quotient_iso_check(3).passed


@pytest.mark.parametrize("n,lam,l,mus", [(2, (), 2, ["(2)"]), (2, (), 0, ["∅"]), (3, (1,), 2, ["(3)", "(2,1)"])])
def test_layer_decomposition_examples(n, lam, l, mus):
    r = layer_decomposition_check(n, lam, l)
    assert r.passed
    dim = next(c for c in r.checks if c.id == "dimension")
    assert dim.detail["mu"] == mus


def test_layer_decomposition_sweep():
    for n in range(5):
        for lam in labels(n):
            for l in valid_layers(n, sum(lam)):
                assert layer_decomposition_check(n, lam, l).passed
    with pytest.raises(ValueError):
        layer_decomposition_check(3, (1,), 1)


def test_layers_cover():
    assert sorted(layers(3, ())) == [1, 3]


def test_rescaling():
    assert rescale_iso_check(2, 3).passed
    assert rescale_iso_check(2, 1).passed
    assert rescale_iso_check(3, Fraction(-5, 2)).passed
    with pytest.raises(ZeroDivisionError):
        rescale_iso_check(2, 0)


def test_delta_one_examples():
    r = delta_one_membership(3, 1)
    assert r.passed
    assert delta_one_membership(2, 0).passed
    r = delta_one_membership(4)
    assert r.passed and any("omega_{1..3}" in c.id for c in r.checks)
    # the top case outside the hypotheses is not reached
    assert delta_one_membership(2).data["omega_{1..n} in the parity ideal at (1,1)"] is False


def test_certificate():
    for n, k in [(3, 1), (5, 2), (4, 1)]:
        a, b = certificate_pair(n, k)
        assert multiply(multiply(decorated(a), u_hat_all(n)), decorated(b)) == omega(n, range(1, 2 * k + 1))
    with pytest.raises(ValueError):
        certificate_pair(2, 1)


def test_gram_symmetry():
    for n in range(4):
        assert gram_symmetry_check(n).passed
