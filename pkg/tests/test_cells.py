import random

import pytest

from pbrauer import diagram as D
from pbrauer.algebra import Element
from pbrauer.cells import (NotInCell, canonical_cell, cell_members, delta_module, factor, half_count,
                           half_diagrams, labels, simple_dims, smat_identity, smat_mul, smat_transpose)
from pbrauer.params import GENERIC
from pbrauer.scalar import DELTA_PRIME, ONE
from pbrauer.symmetric import perm_mul


def test_cell_descriptors():
    c = canonical_cell(2, 2)
    assert c.right_config == () and c.slots == (1, 2)
    c = canonical_cell(3, 1)
    assert c.right_config == ((-1,), (-2,)) and c.slots == (3,)
    assert len(cell_members(c)) == len(half_diagrams(3, 1)) == 6


def test_half_counts():
    assert [len(half_diagrams(2, k)) for k in range(3)] == [2, 2, 1]
    assert [len(half_diagrams(3, k)) for k in range(4)] == [4, 6, 3, 1]
    for n in range(5):
        for k in range(n + 1):
            assert half_count(n, k) == len(half_diagrams(n, k))
            assert half_count(n, k, True) == len(half_diagrams(n, k, True))


def test_factor():
    h, pi = factor(D.identity(3), canonical_cell(3, 3))
    assert pi == (1, 2, 3)
    assert factor(D.transposition(2, 1), canonical_cell(2, 2))[1] == (2, 1)
    with pytest.raises(NotInCell):
        factor(D.identity(2), canonical_cell(2, 1))
    # right action of the group on the slots
    for n in range(1, 4):
        for k in range(n + 1):
            cell = canonical_cell(n, k)
            for d in cell_members(cell):
                h, pi = factor(d, cell)
                for w in [tuple(range(1, k + 1))[::-1], tuple(range(2, k + 1)) + (1,)] if k else []:
                    pw = D.tensor(D.identity(n - k), D.permutation(w))
                    h2, pi2 = factor(D.compose(d, pw).diagram, cell)
                    assert h2 == h and pi2 == perm_mul(w, pi)


def test_small_modules():
    m = delta_module(1, ())
    assert m.act(Element.of(D.eps_generator(1, 1))) == [[DELTA_PRIME]]
    assert m.gram() == [[DELTA_PRIME]]
    assert delta_module(1, (1,)).gram() == [[ONE]]
    for n in range(4):
        for lam in labels(n):
            m = delta_module(n, lam)
            assert m.act(Element.one(n)) == smat_identity(m.dim)


def test_sum_of_squares():
    for n in range(6):
        assert sum(delta_module(n, lam).dim ** 2 for lam in labels(n)) == len(D.enumerate_diagrams(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_module_axiom_and_contravariance(n):
    rng = random.Random(n)
    for lam in labels(n):
        m = delta_module(n, lam)
        G = m.gram()
        for _ in range(40):
            a, b = D.random_diagram(n, rng), D.random_diagram(n, rng)
            assert m.act(Element.of(a) * Element.of(b)) == smat_mul(m.act_diagram(a), m.act_diagram(b))
            assert smat_mul(G, m.act_diagram(a)) == smat_mul(smat_transpose(m.act_diagram(D.star(a))), G)


def test_top_cell_gram_is_specht_form():
    from pbrauer.symmetric import specht_rep

    for lam in [(3,), (2, 1), (1, 1, 1)]:
        G = delta_module(3, lam).gram()
        assert all(c.terms.keys() <= {(0, 0)} for row in G for c in row)
        assert [[c.evaluate(1, 1) for c in row] for row in G] == specht_rep(lam).gram


def test_semisimple_points():
    dims = simple_dims(3, *GENERIC)
    assert all(dims[lam] == delta_module(3, lam).dim for lam in labels(3))
    assert simple_dims(1, 2, 0)[()] == 0
    total = sum(dims[lam] * delta_module(3, lam).dim for lam in labels(3))
    assert total == 76
