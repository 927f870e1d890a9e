"""Fallback count-table kernels: vectorized NumPy rows, or plain big-int lists.

`bigraded_table` mirrors the compiled kernel exactly (int64, caller guarantees
the values fit).  `bigraded_table_bigint` is the arbitrary-precision variant
used whenever the proven value bound does not fit in 64 bits.
"""

import numpy as np


def bigraded_table(degrees, t_max, mu_max):
    a = np.zeros((t_max + 1, mu_max + 1), dtype=np.int64)
    a[0, 0] = 1
    for d in degrees:
        for t in range(1, t_max + 1):
            a[t, d:] += a[t - 1, : mu_max + 1 - d]
    return a


def bigraded_table_bigint(degrees, t_max, mu_max):
    rows = [[0] * (mu_max + 1) for _ in range(t_max + 1)]
    rows[0][0] = 1
    for d in degrees:
        for t in range(1, t_max + 1):
            prev = rows[t - 1]
            cur = rows[t]
            for mu in range(d, mu_max + 1):
                v = prev[mu - d]
                if v:
                    cur[mu] += v
    return rows
