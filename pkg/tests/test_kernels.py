import numpy as np
import pytest

from oracles import brute_count
from vpfbetti import kernels
from vpfbetti._kernels_py import bigraded_table, bigraded_table_bigint


def table_entries(table, t_max, mu_max):
    return [[int(table[t][mu]) for mu in range(mu_max + 1)] for t in range(t_max + 1)]


def test_fallback_matches_brute_force():
    table = bigraded_table([2, 3, 6], 5, 20)
    cols = [(2, 1), (3, 1), (6, 1)]
    for t in range(6):
        for mu in range(21):
            assert table[t][mu] == brute_count(cols, (mu, t))


def test_bigint_matches_fallback():
    a = bigraded_table([1, 2, 5, 5], 8, 30)
    b = bigraded_table_bigint([1, 2, 5, 5], 8, 30)
    assert table_entries(a, 8, 30) == table_entries(b, 8, 30)


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel not built")
def test_compiled_matches_fallback():
    from vpfbetti import _kernels

    a = _kernels.bigraded_table([2, 3, 6, 7], 12, 90)
    b = bigraded_table([2, 3, 6, 7], 12, 90)
    assert np.array_equal(np.asarray(a), b)


def test_dispatch_uses_bigint_when_unsafe(monkeypatch):
    monkeypatch.setattr(kernels, "_INT64_SAFE", 5)
    table = kernels.bigraded_table([1, 1], 6, 6)
    assert isinstance(table, list)  # big-int list path
    assert table[6][6] == 7


def test_value_bound():
    assert kernels.value_bound(0, 100) == 1
    assert kernels.value_bound(1, 100) == 1
    assert kernels.value_bound(3, 4) == 15  # compositions of 4 into 3 parts


def test_degree_zero_column():
    # a generator of degree zero still has bidegree (0, 1): counts stay finite
    table = kernels.bigraded_table([0, 2], 4, 8)
    cols = [(0, 1), (2, 1)]
    for t in range(5):
        for mu in range(9):
            assert int(table[t][mu]) == brute_count(cols, (mu, t))
