"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is checked for agreement before it is timed. The first numba
call (JIT compile or cache load) is excluded.
"""

import argparse
import math
import time

import numpy as np

from eshelby2d import _kernels
from eshelby2d.algebra import GroupElement, random_eshelby
from eshelby2d.diophantine import ESHELBY_WEIGHTS


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    M1 = random_eshelby(1).array
    M2 = random_eshelby(2).array
    grid = np.stack([GroupElement(t).matrix
                     for t in np.linspace(0, 2 * math.pi, 720, endpoint=False)])
    big = np.concatenate([grid] * 50)
    w = np.asarray(ESHELBY_WEIGHTS, dtype=np.int64)
    return [
        ("act4 x1000", lambda k: [k.act4(grid[i % 720], M1) for i in range(1000)]),
        ("act4_batch n=36000", lambda k: k.act4_batch(big, M1)),
        ("orbit_residuals n=720", lambda k: k.orbit_residuals(grid, M1, M2)),
        ("enumerate_solutions bound=10", lambda k: k.enumerate_solutions(w, 10)),
    ]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")
    nb, npy = _kernels.numba_impl, _kernels.numpy_impl

    print(f"{'kernel':32s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s}")
    for name, run in cases():
        a, b = run(npy), run(nb)  # also warms up the JIT
        assert np.allclose(np.asarray(a), np.asarray(b), rtol=0, atol=1e-12), name
        t_np = best_of(lambda: run(npy), args.repeat)
        t_nb = best_of(lambda: run(nb), args.repeat)
        print(f"{name:32s} {1e3 * t_np:11.3f} {1e3 * t_nb:11.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
