"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 7] [--jacobi-size 40] [--repeat 3]

Times canonical labelling over the full connected-graph enumeration and
cyclic Jacobi on random symmetric matrices, once per backend.
"""
import argparse
import time

import numpy as np

from nodalspec import _kernels
from nodalspec._kernels import _pure
from nodalspec.radius_order import enumerate_connected


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def labelling_workload(n):
    # every one-vertex extension of every connected graph on n - 1 vertices
    jobs = []
    for h in enumerate_connected(n - 1):
        base = h.bitrows()
        bit = 1 << (n - 1)
        for mask in range(1, 1 << (n - 1)):
            rows = [r | bit if mask >> u & 1 else r for u, r in enumerate(base)]
            rows.append(mask)
            jobs.append(rows)
    return jobs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=7, help="order of the labelling workload")
    parser.add_argument("--jacobi-size", type=int, default=40)
    parser.add_argument("--jacobi-count", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": _pure}
    if _kernels.compiled_available():
        from nodalspec._kernels import _core
        backends["compiled"] = _core
    else:
        print("compiled extension not built; timing the pure backend only")

    jobs = labelling_workload(args.n)
    rng = np.random.default_rng(0)
    mats = []
    for _ in range(args.jacobi_count):
        m = rng.standard_normal((args.jacobi_size, args.jacobi_size))
        mats.append(m + m.T)

    keys = {}
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}")
    results = {}
    for name, mod in backends.items():
        t = best_of(lambda: [mod.canonical_label(args.n, rows) for rows in jobs], args.repeat)
        keys[name] = [mod.canonical_label(args.n, rows)[0] for rows in jobs[:2000]]
        results[("label", name)] = t
        print(f"{f'canonical_label n={args.n} ({len(jobs)})':<28}{name:<10}{t:>10.3f}")
    for name, mod in backends.items():
        t = best_of(lambda: [mod.jacobi_eigh(m, 100) for m in mats], args.repeat)
        results[("jacobi", name)] = t
        print(f"{f'jacobi {args.jacobi_size}x{args.jacobi_size} ({len(mats)})':<28}{name:<10}{t:>10.3f}")
    if len(backends) == 2:
        assert keys["python"] == keys["compiled"], "backends disagree on canonical keys"
        for kind in ("label", "jacobi"):
            print(f"speedup {kind}: {results[(kind, 'python')] / results[(kind, 'compiled')]:.1f}x")


if __name__ == "__main__":
    main()
