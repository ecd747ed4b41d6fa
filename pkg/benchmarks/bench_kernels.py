"""Time the batch estimator kernels: numba against plain numpy.

    python3 benchmarks/bench_kernels.py [--reps 5000] [--n 40 100] [--repeat 5]

The numba timing excludes the first (compiling) call.
"""

import argparse
import timeit

import numpy as np

from wpdf import kernels
from wpdf.study import StudyConfig, run_study


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=5000)
    ap.add_argument("--n", type=int, nargs="+", default=[40, 100])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {"numpy": kernels.get_backend("numpy")}
    try:
        backends["numba"] = kernels.get_backend("numba")
    except ImportError:
        print("numba not installed; timing numpy only")

    rng = np.random.default_rng(0)
    print(f"{'n':>5} {'backend':>8} {'best ms':>10} {'speedup':>8}")
    for n in args.n:
        x = rng.random((args.reps, n)) ** 0.25
        times = {}
        for name, be in backends.items():
            be.fit_all(x)
            times[name] = min(timeit.repeat(lambda: be.fit_all(x), number=1, repeat=args.repeat))
        for name, t in times.items():
            print(f"{n:>5} {name:>8} {t * 1e3:>10.2f} {times['numpy'] / t:>7.1f}x")

    cfg = StudyConfig(replications=args.reps)
    print("\nfull default study grid (sampling included):")
    for name in backends:
        for workers in (1, 4):
            t = min(timeit.repeat(lambda: run_study(cfg, workers=workers, backend=name), number=1, repeat=2))
            print(f"  {name:>6} workers={workers}: {t:.2f} s")


if __name__ == "__main__":
    main()
