"""Integer kernels: diagram composition and the tensor-space matrices.

A diagram of rank ``n`` is a partner array of length ``2n``: slot ``i < n`` is
the unprimed vertex ``i+1``, slot ``n+i`` is the primed vertex ``(i+1)'``, and
``p[x] == x`` marks a singleton.  The same source runs compiled under numba or
as plain Python (see :mod:`pbrauer._accel`).
"""

import numpy as np

from ._accel import HAVE_NUMBA, njit


def compose_core(a, b, n, out, seen):
    """Juxtapose ``a | b`` and straighten.

    Writes the exterior partner array into ``out`` and returns
    ``(loops, strings)``.  ``seen`` is scratch space of length ``n`` and must
    be zeroed by the caller.

    Graph nodes are numbered ``0..3n-1``: ``a``'s vertex ``x`` sits at node
    ``x`` and ``b``'s vertex ``y`` at node ``n+y``, so equator point ``i`` is
    node ``n+i`` for both.
    """
    two_n = 2 * n
    # walks from the exterior vertices; exterior index of right border vertex
    # y' of b is n+y in the output
    for start in range(two_n):
        # already assigned from the other end of a pair
        if out[start] != -1:
            continue
        # first step leaves the exterior vertex inside its own diagram
        if start < n:
            q = a[start]
            if q == start:
                out[start] = start
                continue
            if q < n:
                out[start] = q
                out[q] = start
                continue
            cur = q  # equator node n+i, reached from a
            from_a = True
        else:
            v = start  # b's primed vertex index
            q = b[v]
            if q == v:
                out[start] = start
                continue
            if q >= n:
                out[start] = q
                out[q] = start
                continue
            cur = n + q  # equator node, reached from b
            from_a = False
        while True:
            i = cur - n
            seen[i] = 1
            if from_a:
                q = b[i]
                if q == i:
                    out[start] = start
                    break
                if q >= n:
                    out[start] = q
                    out[q] = start
                    break
                cur = n + q
                from_a = False
            else:
                v = n + i
                q = a[v]
                if q == v:
                    out[start] = start
                    break
                if q < n:
                    out[start] = q
                    out[q] = start
                    break
                cur = q
                from_a = True

    loops = 0
    strings = 0
    for i0 in range(n):
        if seen[i0]:
            continue
        seen[i0] = 1
        # walk through a's side first
        closed = False
        i = i0
        from_a = False
        while True:
            if from_a:
                q = b[i]
                if q == i:
                    break
                j = q
                from_a = False
            else:
                v = n + i
                q = a[v]
                if q == v:
                    break
                j = q - n
                from_a = True
            if j == i0:
                closed = True
                break
            seen[j] = 1
            i = j
        if closed:
            loops += 1
            continue
        # open: walk the other direction from the start point
        i = i0
        from_a = True
        while True:
            if from_a:
                q = b[i]
                if q == i:
                    break
                j = q
                from_a = False
            else:
                v = n + i
                q = a[v]
                if q == v:
                    break
                j = q - n
                from_a = True
            seen[j] = 1
            i = j
        strings += 1
    return loops, strings


def compose_tuple(a, b, n):
    """Pure-Python single composition on partner tuples."""
    out = [-1] * (2 * n)
    seen = [0] * n
    loops, strings = compose_core(a, b, n, out, seen)
    return loops, strings, tuple(out)


def _compose_batch_py(A, B, n):
    p, q = A.shape[0], B.shape[0]
    out = np.empty((p, q, 2 * n), dtype=np.int64)
    loops = np.empty((p, q), dtype=np.int64)
    strings = np.empty((p, q), dtype=np.int64)
    rows_a = A.tolist()
    rows_b = B.tolist()
    for x in range(p):
        for y in range(q):
            k, m, o = compose_tuple(rows_a[x], rows_b[y], n)
            out[x, y] = o
            loops[x, y] = k
            strings[x, y] = m
    return out, loops, strings


if HAVE_NUMBA:
    _core_jit = njit(compose_core)

    @njit
    def _compose_batch_jit(A, B, n):
        p, q = A.shape[0], B.shape[0]
        out = np.full((p, q, 2 * n), -1, dtype=np.int64)
        loops = np.empty((p, q), dtype=np.int64)
        strings = np.empty((p, q), dtype=np.int64)
        seen = np.zeros(max(n, 1), dtype=np.int64)
        for x in range(p):
            for y in range(q):
                seen[:] = 0
                k, m = _core_jit(A[x], B[y], n, out[x, y], seen)
                loops[x, y] = k
                strings[x, y] = m
        return out, loops, strings


def compose_batch(A, B, n):
    """All compositions ``A[x] | B[y]``.

    Returns ``(out, loops, strings)`` with shapes ``(p, q, 2n)``, ``(p, q)``,
    ``(p, q)``.
    """
    if n == 0:
        p, q = len(A), len(B)
        z = np.zeros((p, q), dtype=np.int64)
        return np.zeros((p, q, 0), dtype=np.int64), z, z.copy()
    A = np.ascontiguousarray(A, dtype=np.int64).reshape(-1, 2 * n)
    B = np.ascontiguousarray(B, dtype=np.int64).reshape(-1, 2 * n)
    if HAVE_NUMBA and n > 0:
        return _compose_batch_jit(A, B, n)
    return _compose_batch_py(A, B, n)


# -- tensor space --------------------------------------------------------


def _psi_loops(partner, m, k):
    base = k + 1
    dim = base ** m
    mat = np.zeros((dim, dim), dtype=np.int64)
    jd = np.empty(m, dtype=np.int64)
    idg = np.empty(m, dtype=np.int64)
    for j in range(dim):
        t = j
        for s in range(m - 1, -1, -1):
            jd[s] = t % base
            t //= base
        for i in range(dim):
            t = i
            for s in range(m - 1, -1, -1):
                idg[s] = t % base
                t //= base
            ok = True
            for x in range(2 * m):
                y = partner[x]
                vx = jd[x] if x < m else idg[x - m]
                if y == x:
                    if vx != 0:
                        ok = False
                        break
                elif y > x:
                    vy = jd[y] if y < m else idg[y - m]
                    if vx != vy:
                        ok = False
                        break
            if ok:
                mat[j, i] = 1
    return mat


def _psi_numpy(partner, m, k):
    base = k + 1
    dim = base ** m
    idx = np.arange(dim)
    digits = np.stack([(idx // base ** (m - 1 - s)) % base for s in range(m)], axis=1)
    # value of vertex x at (output j, input i)
    out_vals = digits[:, None, :]  # (dim, 1, m) for unprimed vertices
    in_vals = digits[None, :, :]   # (1, dim, m) for primed vertices
    mask = np.ones((dim, dim), dtype=bool)

    def value(x):
        return out_vals[:, :, x] if x < m else in_vals[:, :, x - m]

    for x in range(2 * m):
        y = int(partner[x])
        if y == x:
            mask &= value(x) == 0
        elif y > x:
            mask &= value(x) == value(y)
    return mask.astype(np.int64)


if HAVE_NUMBA:
    _psi_jit = njit(_psi_loops)


def psi_matrix(partner, m, k):
    """0/1 matrix of a rank-``m`` diagram on ``(k+1)^m`` tensor space.

    Rows are output multi-indices (unprimed vertices), columns inputs
    (primed vertices); slot 1 is the most significant digit.
    """
    p = np.asarray(partner, dtype=np.int64)
    if m == 0:
        return np.ones((1, 1), dtype=np.int64)
    if HAVE_NUMBA:
        return _psi_jit(p, m, k)
    return _psi_numpy(p, m, k)
