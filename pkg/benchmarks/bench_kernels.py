"""Time the numba and pure-numpy kernel backends on the same seeded instance.

The fallback backend is timed in a child process started with
``FBOUNDED_DISABLE_JIT=1`` so that no jitted helper leaks into it.

    python benchmarks/bench_kernels.py --n 10 --m 20 --repeat 3
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def best_time(fn, args, repeat):
    fn(*args)  # warm up / compile
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def measure(args):
    from fbounded import kernels
    from fbounded._jit import backend
    from fbounded.generate import random_instance
    from fbounded.solver import expand_gadget

    G, f = random_instance(args.n, args.m, args.fmax, args.seed)
    eu, ev = G.endpoints
    pair_args = (G.n, eu, ev, np.asarray(f, dtype=np.int64))
    g, _ = expand_gadget(G, f)
    indptr, indices = g.csr
    return backend(), {
        f"scan_pairs (3^{G.n} pairs)": best_time(kernels.scan_pairs, pair_args, args.repeat),
        f"best_subset (2^{G.m} subsets)": best_time(kernels.best_subset, pair_args, args.repeat),
        f"blossom ({g.n} gadget vertices)": best_time(
            kernels.blossom_matching, (g.n, indptr, indices), args.repeat
        ),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--m", type=int, default=20)
    parser.add_argument("--fmax", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.child:
        print(json.dumps(measure(args)))
        return

    results = {}
    for flag in ("0", "1"):
        env = dict(os.environ, FBOUNDED_DISABLE_JIT=flag)
        out = subprocess.run(
            [sys.executable, __file__, "--child", *sys.argv[1:]],
            env=env, capture_output=True, text=True, check=True,
        ).stdout
        name, timings = json.loads(out)
        results[name] = timings
    if "numba" not in results:
        raise SystemExit("numba is not importable; only the numpy backend is available")

    print(f"{'kernel':<34}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for kernel, fast in results["numba"].items():
        slow = results["numpy"][kernel]
        print(f"{kernel:<34}{fast:>12.5f}{slow:>12.5f}{slow / fast:>10.1f}")


if __name__ == "__main__":
    main()
