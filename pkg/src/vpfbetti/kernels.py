"""Kernel selection: compiled extension when importable, pure fallback otherwise.

Set the environment variable ``VPFBETTI_PURE=1`` to force the fallback even
when the compiled module is present (used by the benchmark and by tests).
"""

import os
from math import comb

from . import _kernels_py

if os.environ.get("VPFBETTI_PURE"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None

# int64 guard: table values never exceed the number of compositions of t_max.
_INT64_SAFE = 2**62


def value_bound(n_columns, t_max):
    """Upper bound on any entry of a bigraded count table with n columns."""
    if n_columns == 0:
        return 1
    return comb(t_max + n_columns - 1, n_columns - 1)


def bigraded_table(degrees, t_max, mu_max):
    """Dense table T[t][mu] of counts for columns (d, 1), exact.

    Chooses the compiled kernel when available and when all values provably
    fit in 64 bits; otherwise computes with arbitrary-precision integers.
    """
    degrees = [int(d) for d in degrees]
    if value_bound(len(degrees), t_max) < _INT64_SAFE:
        impl = _compiled if _compiled is not None else _kernels_py
        return impl.bigraded_table(degrees, t_max, mu_max)
    return _kernels_py.bigraded_table_bigint(degrees, t_max, mu_max)
