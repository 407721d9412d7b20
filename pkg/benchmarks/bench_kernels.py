"""Compiled kernels vs the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the Laplacian, component labelling and sign-component counting on a few
graph sizes, then a short random search run with each backend swapped in.
"""
import argparse
import time
import timeit

import numpy as np

from hamnodal import _fallback, kernels
from hamnodal.minimizer import SearchConfig, search

try:
    from hamnodal import _kernels
except ImportError:
    _kernels = None

SIZES = [(10, 2), (6, 3), (8, 3), (5, 5)]


def best_of(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def kernel_rows(repeat):
    rows = []
    for n, q in SIZES:
        rng = np.random.default_rng(n * q)
        f = rng.integers(-3, 4, size=q**n).astype(np.int64)
        mask = (f > 0).astype(np.uint8)
        for name, impl in (("python", _fallback), ("compiled", _kernels)):
            if impl is None:
                continue
            rows.append((f"H({n},{q})", name,
                         best_of(lambda: impl.laplacian(f, n, q), repeat),
                         best_of(lambda: impl.label_components(mask, n, q), repeat),
                         best_of(lambda: impl.sign_component_counts(f, n, q), repeat)))
    return rows


def search_rate(impl, samples=256):
    saved = kernels.sign_component_counts
    kernels.sign_component_counts = impl.sign_component_counts
    try:
        start = time.perf_counter()
        res = search(SearchConfig(3, 3, 3, samples=samples, local_steps=20, seed=0))
        return res.evaluations / (time.perf_counter() - start)
    finally:
        kernels.sign_component_counts = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'graph':8} {'backend':9} {'laplacian':>12} {'components':>12} {'sign counts':>12}")
    for graph, name, lap, comp, sign in kernel_rows(args.repeat):
        print(f"{graph:8} {name:9} {lap * 1e6:10.1f}us {comp * 1e6:10.1f}us {sign * 1e6:10.1f}us")
    print()
    for name, impl in (("python", _fallback), ("compiled", _kernels)):
        if impl is not None:
            print(f"search (3,3,3) {name:9} {search_rate(impl):10.0f} evaluations/s")


if __name__ == "__main__":
    main()
