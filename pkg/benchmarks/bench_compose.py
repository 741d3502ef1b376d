"""Batch composition and tensor-space matrices: numba kernels against the pure fallback.

Each backend runs in its own interpreter because the flag is read at import.

    python3 benchmarks/bench_compose.py [--n 4] [--rows 200]
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
import numpy as np
from pbrauer import backend
from pbrauer import diagram as D
from pbrauer.kernels import compose_batch, psi_matrix

n, rows = int(sys.argv[1]), int(sys.argv[2])
ds = D.enumerate_diagrams(n)
A = np.array([d.p for d in ds[:rows]], dtype=np.int64)
B = np.array([d.p for d in ds], dtype=np.int64)
compose_batch(A[:1], B[:1], n)  # warm up (compilation)
psi_matrix(np.array(ds[0].p), n, 2)
t = time.perf_counter()
out, loops, strings = compose_batch(A, B, n)
t_batch = time.perf_counter() - t
t = time.perf_counter()
for d in ds[:50]:
    psi_matrix(np.array(d.p), n, 2)
t_psi = time.perf_counter() - t
print(json.dumps({"backend": backend(), "pairs": int(loops.size), "batch_s": t_batch,
                  "psi_s": t_psi, "checksum": int(out.sum() + 3 * loops.sum() + 7 * strings.sum())}))
"""


def run(flag: str, n: int, rows: int) -> dict:
    env = dict(os.environ, PBRAUER_NUMBA=flag)
    res = subprocess.run([sys.executable, "-c", CHILD, str(n), str(rows)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--rows", type=int, default=200)
    args = ap.parse_args()
    fast = run("1", args.n, args.rows)
    slow = run("0", args.n, args.rows)
    if fast["checksum"] != slow["checksum"]:
        raise SystemExit("backends disagree")
    print(f"n={args.n}: {fast['pairs']} compositions, 50 tensor matrices at k=2")
    for r in (fast, slow):
        print(f"  {r['backend']:>8}: batch {r['batch_s']:.4f} s   psi {r['psi_s']:.4f} s")
    if fast["backend"] == "numba":
        print(f"  speedup: batch x{slow['batch_s'] / fast['batch_s']:.1f}, psi x{slow['psi_s'] / fast['psi_s']:.1f}")


if __name__ == "__main__":
    main()
