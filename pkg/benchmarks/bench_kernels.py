"""Benchmark: compiled count-table kernel vs the pure fallbacks.

Runs the same dense bigraded table fills through the Cython extension (when
built), the vectorized NumPy fallback, and the big-integer fallback, and
reports wall times and speedups.  Also times a representative chamber fit.

Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from vpfbetti import _kernels_py
from vpfbetti.chambers import chamber_complex_2xn, global_lattice
from vpfbetti.counting import DegreeMatrix
from vpfbetti.quasipoly import fit_chamber_qp

try:
    from vpfbetti import _kernels
except ImportError:
    _kernels = None

WORKLOADS = [
    ("degrees (2,3,6), t <= 2000", [2, 3, 6], 2000, 12000),
    ("degrees (1..7), t <= 600", [1, 2, 3, 4, 5, 6, 7], 600, 4200),
    ("degrees (2,3,6,7), t <= 1200", [2, 3, 6, 7], 1200, 8400),
]


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    print(f"compiled kernel available: {_kernels is not None}")
    for label, degrees, t_max, mu_max in WORKLOADS:
        cells = (t_max + 1) * (mu_max + 1)
        print(f"\n{label}  ({cells} cells)")
        t_np, ref = time_call(_kernels_py.bigraded_table, degrees, t_max, mu_max)
        print(f"  numpy fallback : {t_np * 1e3:9.1f} ms")
        if _kernels is not None:
            t_c, out = time_call(_kernels.bigraded_table, degrees, t_max, mu_max)
            assert np.array_equal(np.asarray(out), ref)
            print(f"  compiled       : {t_c * 1e3:9.1f} ms   ({t_np / t_c:.2f}x vs numpy)")
        if cells <= 2_000_000:
            t_big, big = time_call(
                _kernels_py.bigraded_table_bigint, degrees, t_max, mu_max, repeats=1
            )
            assert all(
                int(ref[t][mu]) == big[t][mu]
                for t in range(0, t_max + 1, max(1, t_max // 7))
                for mu in range(0, mu_max + 1, max(1, mu_max // 17))
            )
            print(f"  big-int fallback: {t_big * 1e3:8.1f} ms   ({t_big / t_np:.1f}x slower than numpy)")

    print("\nchamber fit, degrees (2,3,6), global lattice (12 residues):")
    ring = DegreeMatrix.bigraded([2, 3, 6])
    chambers = chamber_complex_2xn([2, 3, 6])
    lattice = global_lattice([2, 3, 6])
    start = time.perf_counter()
    for chamber in chambers:
        fit_chamber_qp(ring, chamber, lattice)
    print(f"  both chambers fitted and validated in {(time.perf_counter() - start) * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
