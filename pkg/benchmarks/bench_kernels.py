"""Compare the compiled and pure-Python staircase scans.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each case scans every staircase of one size against a batch of point sets,
which is the inner loop of a survey. Both backends must return identical
results; the script aborts otherwise.
"""
import argparse
import random
import time
from itertools import combinations, islice

from gbcount import _kernels_py
from gbcount.enumeration import Counter, _box_corners, enumerate_staircases

try:
    from gbcount import _ckernels
except ImportError:
    _ckernels = None

# (n, p, m, number of point sets)
CASES = [
    (4, 2, 8, 2000),
    (3, 2, 4, 70),
    (2, 3, 4, 126),
    (3, 3, 3, 300),
    (2, 5, 6, 200),
]


def workload(n, p, m, k, seed=0):
    ctr = Counter(n, p)
    layout = [([ctr.index[c] for c in lam.cells], [ctr.index[a] for a in _box_corners(lam)])
              for lam in enumerate_staircases(n, p, m)]
    pts = ctr.points
    if k >= sum(1 for _ in islice(combinations(pts, m), k + 1)):
        sets = list(combinations(pts, m))
    else:
        rng = random.Random(seed)
        sets = [rng.sample(pts, m) for _ in range(k)]
    return layout, len(ctr.cells), [[ctr.table[q] for q in S] for S in sets]


def timed(mod, layout, N, batches, p, repeat):
    plan = mod.make_plan(layout, N)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [mod.scan(plan, rows, p) for rows in batches]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'space':>8} {'m':>3} {'stairs':>7} {'sets':>6} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for n, p, m, k in CASES:
        layout, N, batches = workload(n, p, m, k)
        tp, ref = timed(_kernels_py, layout, N, batches, p, args.repeat)
        if _ckernels is not None:
            tc, got = timed(_ckernels, layout, N, batches, p, args.repeat)
            if got != ref:
                raise SystemExit(f"backends disagree on Z_{p}^{n}, m={m}")
            tail = f"{tc:9.3f} {tp / tc:7.1f}x"
        else:
            tail = f"{'-':>9} {'-':>8}"
        print(f"{f'Z_{p}^{n}':>8} {m:3d} {len(layout):7d} {len(batches):6d} {tp:9.3f} {tail}")


if __name__ == "__main__":
    main()
