import pytest

from pbrauer import diagram as D
from pbrauer.algebra import decorated, multiply, omega, product
from pbrauer.morita import (DP_INV, element_identities_check, even_truncation_check, odd_truncation_check, phi,
                            specht_image_check, surviving_counts)
from pbrauer.scalar import DELTA


def test_even_examples():
    p = D.pair_generator(2, 1)
    assert multiply(decorated(p), decorated(p)) == decorated(p).scale(DELTA - 1)
    s = D.transposition(2, 1)
    assert multiply(decorated(s), decorated(s)) == decorated(D.identity(2))
    for n in range(4):
        assert even_truncation_check(n).passed


def test_odd_examples():
    w = omega(2, [1])
    assert product(w, D.transposition(2, 1), w).is_zero()
    # n = 2: the truncation is spanned by dp^-1 <phi(1_1)>, the unit of B_1
    x = decorated(phi(D.identity(1))).scale(DP_INV)
    assert multiply(x, x) == x
    assert decorated(phi(D.identity(1))) == w
    for n in range(1, 5):
        assert odd_truncation_check(n, products=n <= 4).passed


def test_surviving():
    assert [surviving_counts(n) for n in range(1, 5)] == [(1, 1), (3, 1), (15, 3), (105, 15)]


def test_sandwich_identities():
    assert element_identities_check(4, 2).passed


@pytest.mark.parametrize("n,lam,side,dim", [(2, (2,), "even", 1), (2, (1,), "odd", 1), (3, (1,), "even", 3)])
def test_specht_images(n, lam, side, dim):
    r = specht_image_check(n, lam, side)
    assert r.passed and r.checks[0].detail["rank"] == dim
