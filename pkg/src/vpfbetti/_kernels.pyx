# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fill of the dense count table for bigraded degree matrices.

The table T[t][mu] holds the number of ways to reach bidegree (mu, t) as an
N-combination of columns (d_i, 1).  Values must be proven to fit in 64 bits
by the caller (see vpfbetti.kernels); this module does no overflow checking.
"""

import numpy as np


def bigraded_table(degrees, int t_max, int mu_max):
    arr = np.zeros((t_max + 1, mu_max + 1), dtype=np.int64)
    cdef long long[:, ::1] a = arr
    cdef int d, t, mu
    a[0, 0] = 1
    for d in degrees:
        for t in range(1, t_max + 1):
            for mu in range(d, mu_max + 1):
                a[t, mu] += a[t - 1, mu - d]
    return arr
