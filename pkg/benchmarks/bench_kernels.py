"""Compare the compiled and pure-Python chain-count kernels.

Two measurements:

* the raw kernel over every r=3 shape with ``--n`` leaves, called directly
  on both implementations in this process;
* the full ``max_tie_table`` run, each backend in a fresh interpreter so the
  history caches start cold (``MAXTREE_PURE_PYTHON=1`` forces the fallback).

Usage: python benchmarks/bench_kernels.py [--n 25] [--table-n 25] [--repeat 3]
"""
import argparse
import os
import subprocess
import sys
import time

from maxtree import _chain_py
from maxtree.enumeration import enumerate_shapes
from maxtree.histories import post_order_parents

try:
    from maxtree import _chain
except ImportError:
    _chain = None

TABLE_SNIPPET = (
    "import time, maxtree\n"
    "from maxtree.maxprob import max_tie_table\n"
    "t0 = time.perf_counter(); max_tie_table(3, {n})\n"
    "print(maxtree.BACKEND, time.perf_counter() - t0)\n"
)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_kernel(n, repeat):
    jobs = [(post_order_parents(t), t.w) for t in enumerate_shapes(3, n)]
    print(f"kernel: {len(jobs)} shapes, r=3, n={n}, best of {repeat}")
    py = best_of(lambda: [_chain_py.chain_counts(p, j) for p, j in jobs], repeat)
    print(f"  python  {py:8.4f} s")
    if _chain is None:
        print("  cython  (extension not built)")
        return
    cy = best_of(lambda: [_chain.chain_counts(p, j) for p, j in jobs], repeat)
    print(f"  cython  {cy:8.4f} s   speedup x{py / cy:.1f}")


def bench_table(n):
    print(f"table: max_tie_table(3, {n}) in a fresh process")
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("MAXTREE_PURE_PYTHON", None)
        if pure:
            env["MAXTREE_PURE_PYTHON"] = "1"
        res = subprocess.run(
            [sys.executable, "-c", TABLE_SNIPPET.format(n=n)],
            env=env, capture_output=True, text=True, check=True,
        )
        backend, secs = res.stdout.split()
        print(f"  {backend:7s} {float(secs):8.4f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=25)
    ap.add_argument("--table-n", type=int, default=25)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    bench_kernel(args.n, args.repeat)
    bench_table(args.table_n)


if __name__ == "__main__":
    main()
