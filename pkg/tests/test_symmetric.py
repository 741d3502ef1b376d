import math

from pbrauer.symmetric import (all_perms, branch_arrows, hook_length_dim, horizontal_strip, induced_multiplicity,
                               parse_partition, partitions, perm_mul, reduced_word, simple_transposition,
                               specht_rep, standard_tableaux)


def test_dimensions():
    assert hook_length_dim((3,)) == 1
    assert hook_length_dim((2, 1)) == 2
    assert hook_length_dim((2, 2)) == 2 and hook_length_dim((3, 1)) == 3
    for k in range(7):
        assert sum(hook_length_dim(l) ** 2 for l in partitions(k)) == math.factorial(k)
        assert all(len(standard_tableaux(l)) == hook_length_dim(l) for l in partitions(k))


def test_branching():
    assert set(branch_arrows((2, 1), "down")) == {(2,), (1, 1)}
    assert branch_arrows((), "up") == [(1,)]
    for k in range(1, 7):
        for lam in partitions(k):
            assert hook_length_dim(lam) == sum(hook_length_dim(mu) for mu in branch_arrows(lam, "down"))


def test_strips():
    assert horizontal_strip((1,), (2,), 1) and horizontal_strip((1,), (1, 1), 1)
    assert horizontal_strip((1,), (3,), 2) and horizontal_strip((1,), (2, 1), 2)
    assert not horizontal_strip((1,), (1, 1, 1), 2)
    assert [mu for mu in partitions(2) if horizontal_strip((), mu, 2)] == [(2,)]
    assert induced_multiplicity((1,), 2, (2, 1)) == 1


def test_representation():
    for lam in [(2, 1), (3, 2), (2, 2, 1)]:
        rep = specht_rep(lam)
        k = sum(lam)
        perms = list(all_perms(k))
        for u in perms[:40]:
            for v in perms[:10]:
                uv = perm_mul(u, v)
                A, B = rep.rho(u), rep.rho(v)
                prod = [[sum(A[i][t] * B[t][j] for t in range(rep.dim)) for j in range(rep.dim)]
                        for i in range(rep.dim)]
                assert prod == rep.rho(uv)
        assert rep.rho(perms[5]) == rep.rho_direct(perms[5])


def test_words():
    w = (3, 1, 2)
    out = tuple(range(1, 4))
    for i in reduced_word(w):
        out = perm_mul(out, simple_transposition(3, i))
    assert out == w
    assert parse_partition("") == () and parse_partition("(3,1)") == (3, 1)
