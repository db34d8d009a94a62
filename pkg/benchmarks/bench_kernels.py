"""Compare the numba and numpy enumeration backends.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each workload is run once per backend to warm up (numba compiles on first
call), then timed ``--repeat`` times; the median is reported.
"""

import argparse
import itertools
import statistics
import time

from gorquilt import bz, quilt
from gorquilt.polyhedral import cone as pc


def bz_sweep(backend: str) -> int:
    ws = list(itertools.product(range(3), repeat=3))
    return sum(bz.count_fiber(4, a, b, c, backend=backend) for a, b, c in itertools.product(ws[:9], repeat=3))


def bz_large_fiber(backend: str) -> int:
    return bz.count_fiber(5, (4, 3, 3, 4), (4, 3, 3, 4), (4, 3, 3, 4), backend=backend)


def cone_slices(backend: str) -> int:
    return sum(pc.count_by_degree(bz.bz_cone(4), (1,) * 18, 20, backend=backend))


def quilt_counts(backend: str) -> int:
    spec = quilt.quilt_cone(quilt.BUILTIN_GRAPHS["theta"](), 3)
    ws = list(itertools.product(range(3), repeat=2))
    return sum(quilt.graded_dim(spec, dict(enumerate(c)), backend=backend) for c in itertools.product(ws, repeat=3))


WORKLOADS = {
    "bz fibers m=4 sweep": bz_sweep,
    "bz fiber m=5 single": bz_large_fiber,
    "bz m=4 degree slices": cone_slices,
    "theta m=3 graded dims": quilt_counts,
}


def median_time(fn, backend: str, repeat: int) -> tuple[float, int]:
    value = fn(backend)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t)
    return statistics.median(times), value


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':<26}{'numba [s]':>11}{'numpy [s]':>11}{'speedup':>9}  result")
    for name, fn in WORKLOADS.items():
        t_nb, v_nb = median_time(fn, "numba", args.repeat)
        t_np, v_np = median_time(fn, "numpy", args.repeat)
        if v_nb != v_np:
            raise SystemExit(f"{name}: backends disagree ({v_nb} vs {v_np})")
        print(f"{name:<26}{t_nb:>11.4f}{t_np:>11.4f}{t_np / t_nb:>8.1f}x  {v_nb}")


if __name__ == "__main__":
    main()
