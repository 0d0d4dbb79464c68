#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot paths (pairwise-order adjacency build and the per-prime
characteristic polynomial) on a few representative sizes and prints a
comparison table.  Run with POE_PURE_NUMPY=1 to confirm the fallback is
selected at import time as well.
"""

import time

import numpy as np

from poegraphs import _kernels
from poegraphs.groups import GroupSpec
from poegraphs.primes import prime_flags


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_adjacency(rows):
    for spec in ([343], [1331], [2187], [2, 8, 64]):
        g = GroupSpec(spec)
        coords = g.coordinate_array()
        factors = np.array(g.factors, dtype=np.int64)
        mask = prime_flags(g.exponent)
        label = f"adjacency {'x'.join(map(str, spec))} (n={g.total_order})"
        entry = {"kernel": label}
        for backend in ("numba", "numpy"):
            if backend == "numba" and not _kernels._HAVE_NUMBA:
                entry[backend] = None
                continue
            _kernels.build_adjacency(coords, factors, mask, backend=backend)  # warm
            entry[backend] = timeit(
                lambda b=backend: _kernels.build_adjacency(coords, factors, mask, backend=b)
            )
        rows.append(entry)


def bench_charpoly(rows):
    rng = np.random.default_rng(7)
    for n in (64, 128, 256, 343):
        a = rng.integers(0, 2, size=(n, n), dtype=np.int64)
        a = (a | a.T) & ~np.eye(n, dtype=np.int64)
        p = 33_554_393
        entry = {"kernel": f"charpoly mod p, n={n}"}
        for backend in ("numba", "numpy"):
            if backend == "numba" and not _kernels._HAVE_NUMBA:
                entry[backend] = None
                continue
            _kernels.charpoly_mod(a, p, backend=backend)  # warm
            entry[backend] = timeit(lambda b=backend: _kernels.charpoly_mod(a, p, backend=b))
        rows.append(entry)


def main():
    print(f"active backend at import: {_kernels.ACTIVE_BACKEND}")
    rows = []
    bench_adjacency(rows)
    bench_charpoly(rows)
    width = max(len(r["kernel"]) for r in rows) + 2
    print(f"{'kernel':{width}s} {'numba (s)':>12s} {'numpy (s)':>12s} {'speedup':>9s}")
    for r in rows:
        nb, np_ = r.get("numba"), r.get("numpy")
        nb_s = f"{nb:.4f}" if nb is not None else "n/a"
        np_s = f"{np_:.4f}" if np_ is not None else "n/a"
        ratio = f"{np_ / nb:.1f}x" if nb and np_ else "-"
        print(f"{r['kernel']:{width}s} {nb_s:>12s} {np_s:>12s} {ratio:>9s}")


if __name__ == "__main__":
    main()
