"""Both backends of the hot kernels agree."""

import random

import numpy as np
import pytest

from pbrauer import diagram as D
from pbrauer import kernels as K


def test_batch_matches_scalar_compose():
    ds = D.enumerate_diagrams(3)
    rng = random.Random(1)
    A = np.array([d.p for d in rng.sample(ds, 20)])
    B = np.array([d.p for d in rng.sample(ds, 20)])
    out, loops, strings = K.compose_batch(A, B, 3)
    ref = K._compose_batch_py(A, B, 3)
    for x, y in zip((out, loops, strings), ref):
        assert np.array_equal(x, y)
    for i in range(20):
        for j in range(20):
            l, s, res = K.compose_tuple(tuple(A[i]), tuple(B[j]), 3)
            assert (l, s, res) == (loops[i, j], strings[i, j], tuple(out[i, j]))


def test_rank_zero():
    out, loops, strings = K.compose_batch(np.zeros((1, 0)), np.zeros((2, 0)), 0)
    assert out.shape == (1, 2, 0) and loops.sum() == 0


@pytest.mark.parametrize("m,k", [(1, 1), (2, 2), (3, 1)])
def test_psi_paths_agree(m, k):
    for d in D.enumerate_diagrams(m)[:40]:
        p = np.array(d.p, dtype=np.int64)
        assert np.array_equal(K._psi_loops(p, m, k), K._psi_numpy(p, m, k))


def test_env_flag_selects_fallback():
    import os
    import subprocess
    import sys

    code = ("from pbrauer import backend, diagram as D\n"
            "from pbrauer.algebra import presentation_check\n"
            "print(backend(), len(D.enumerate_diagrams(3)), presentation_check(3).passed)")
    env = dict(os.environ, PBRAUER_NUMBA="0")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.split() == ["python", "76", "True"]
