import random
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from pbrauer.linalg import Echelon, determinant, matrix_rank, nullspace, rref, solve_left

mats = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(mats)
def test_rank_against_numpy(M):
    assert matrix_rank(M) == np.linalg.matrix_rank(np.array(M, dtype=float))


@settings(max_examples=80, deadline=None)
@given(mats)
def test_nullspace_is_kernel(M):
    rows = [{j: v for j, v in enumerate(r) if v} for r in M]
    cols = list(range(len(M[0])))
    basis = nullspace(rows, cols)
    assert len(basis) == len(cols) - matrix_rank(M)
    for v in basis:
        for r in M:
            assert sum(Fraction(r[j]) * v.get(j, 0) for j in cols) == 0


def test_solve_left_and_det():
    rows = [{0: 1, 1: 2}, {1: 1, 2: 1}]
    coeffs = solve_left(rows, {0: 2, 1: 5, 2: 1})
    assert coeffs is not None
    assert solve_left(rows, {2: 1, 0: 1}) is None
    assert determinant([[2, 1], [1, 1]]) == 1
    ech = Echelon()
    assert ech.add({0: 1}) and not ech.add({0: 3})
    assert rref([{0: 2, 1: 4}])[0] is not None
