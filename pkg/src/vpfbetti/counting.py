"""The vector partition function: exact counting, truncated series, cone tests.

count(A, u) is the number of ways to write u as a nonnegative integer
combination of the columns of A.  Nonnegative columns with no zero column
make the grading positive, so every count is finite.  Bigraded matrices
(second row all ones) are served from a cached dense table filled by the
selected kernel; everything else runs a boxed dynamic program in pure Python.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .lattices import IntMatrix


@dataclass(frozen=True)
class DegreeMatrix:
    """d x n matrix of generator degrees, stored as columns."""

    dim: int
    columns: tuple[tuple[int, ...], ...]

    @classmethod
    def from_columns(cls, columns, dim=None) -> "DegreeMatrix":
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if cols:
            dim = len(cols[0])
            if any(len(c) != dim for c in cols):
                raise ValueError("columns of unequal length")
        elif dim is None:
            raise ValueError("empty matrix needs an explicit dimension")
        for c in cols:
            if any(x < 0 for x in c):
                raise ValueError("degree entries must be nonnegative")
            if all(x == 0 for x in c):
                raise ValueError("zero column makes the grading non-positive")
        return cls(int(dim), cols)

    @classmethod
    def bigraded(cls, degrees) -> "DegreeMatrix":
        """Columns (d_i, 1) for a Z^2-graded polynomial ring."""
        return cls.from_columns([(int(d), 1) for d in degrees])

    @property
    def size(self) -> int:
        return len(self.columns)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    def is_bigraded(self) -> bool:
        return self.dim == 2 and all(c[1] == 1 for c in self.columns)

    def rank(self) -> int:
        if not self.columns:
            return 0
        return IntMatrix.from_rows(
            [[c[i] for c in self.columns] for i in range(self.dim)]
        ).rank()


class _BigradedOracle:
    """Grow-on-demand dense count table for one bigraded matrix."""

    def __init__(self, degrees):
        self.degrees = list(degrees)
        self.max_deg = max(self.degrees) if self.degrees else 0
        self.t_max = -1
        self.mu_max = -1
        self.table = None

    def ensure(self, mu, t):
        if t <= self.t_max and mu <= self.mu_max:
            return
        new_t = max(t, 2 * self.t_max, 16)
        new_mu = max(mu, 2 * self.mu_max, 16)
        if new_t * self.max_deg <= 4 * new_mu:
            # cheap to cover the whole cone up to new_t; avoids regrowth
            new_mu = max(new_mu, self.max_deg * new_t)
        self.table = kernels.bigraded_table(self.degrees, new_t, new_mu)
        self.t_max = new_t
        self.mu_max = new_mu

    def value(self, u):
        mu, t = u
        if t < 0 or mu < 0:
            return 0
        if mu > self.max_deg * t or mu < min(self.degrees) * t:
            return 0
        self.ensure(mu, t)
        return int(self.table[t][mu])


class _GeneralOracle:
    """Boxed dynamic program for arbitrary nonnegative degree matrices."""

    def __init__(self, columns, dim):
        self.columns = columns
        self.dim = dim
        self.bound = None
        self.table = None

    def ensure(self, u):
        if self.bound is not None and all(a <= b for a, b in zip(u, self.bound)):
            return
        bound = tuple(
            max(a, 2 * b if self.bound else a, 8)
            for a, b in zip(u, self.bound or u)
        )
        self.table = _box_table(self.columns, bound)
        self.bound = bound

    def value(self, u):
        if any(x < 0 for x in u):
            return 0
        self.ensure(u)
        return self.table.get(tuple(u), 0)


def _box_table(columns, bound):
    """Coefficients of prod 1/(1 - t^{a_j}) on the box [0, bound]."""
    dims = [b + 1 for b in bound]
    table = {cell: 0 for cell in itertools.product(*[range(s) for s in dims])}
    table[tuple(0 for _ in dims)] = 1
    for col in columns:
        for cell in itertools.product(*[range(c, s) for c, s in zip(col, dims)]):
            prev = tuple(a - b for a, b in zip(cell, col))
            v = table[prev]
            if v:
                table[cell] += v
    return table


_ORACLES: dict[DegreeMatrix, object] = {}


def _oracle(A: DegreeMatrix):
    cached = _ORACLES.get(A)
    if cached is None:
        if A.is_bigraded():
            cached = _BigradedOracle(A.degrees)
        else:
            cached = _GeneralOracle(A.columns, A.dim)
        _ORACLES[A] = cached
    return cached


def count(A: DegreeMatrix, u) -> int:
    """Number of lambda in N^n with A . lambda = u; zero outside the cone."""
    u = tuple(int(x) for x in u)
    if len(u) != A.dim:
        raise ValueError("point dimension mismatch")
    if not A.columns:
        return 1 if all(x == 0 for x in u) else 0
    return _oracle(A).value(u)


def series_coeffs(A: DegreeMatrix, bound) -> dict[tuple[int, ...], int]:
    """All coefficients of prod 1/(1 - t^{a_j}) for 0 <= u <= bound."""
    bound = tuple(int(b) for b in bound)
    if len(bound) != A.dim:
        raise ValueError("bound dimension mismatch")
    if any(b < 0 for b in bound):
        raise ValueError("bound must be componentwise nonnegative")
    if not A.columns:
        out = {cell: 0 for cell in itertools.product(*[range(b + 1) for b in bound])}
        out[tuple(0 for _ in bound)] = 1
        return out
    if A.is_bigraded():
        mu_max, t_max = bound
        table = kernels.bigraded_table(list(A.degrees), t_max, mu_max)
        return {
            (mu, t): int(table[t][mu])
            for mu in range(mu_max + 1)
            for t in range(t_max + 1)
        }
    return _box_table(A.columns, bound)


def in_pos_cone(A: DegreeMatrix, u) -> bool:
    """Exact test for membership of u in the real cone spanned by the columns."""
    u = tuple(Fraction(x) for x in u)
    if len(u) != A.dim:
        raise ValueError("point dimension mismatch")
    if all(x == 0 for x in u):
        return True
    if not A.columns:
        return False
    if A.is_bigraded():
        mu, t = u
        if t <= 0:
            return False
        return min(A.degrees) * t <= mu <= max(A.degrees) * t
    return _lp_feasible(A.columns, u)


def _lp_feasible(columns, u) -> bool:
    """Phase-1 simplex over Q with Bland's rule: is {x >= 0 : A x = u} nonempty?"""
    d = len(u)
    n = len(columns)
    rows = []
    rhs = []
    for i in range(d):
        coeffs = [Fraction(c[i]) for c in columns]
        b = Fraction(u[i])
        if b < 0:
            coeffs = [-a for a in coeffs]
            b = -b
        rows.append(coeffs)
        rhs.append(b)
    # tableau over variables x_0..x_{n-1} and artificials a_0..a_{d-1}
    width = n + d
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(d)] + [rhs[i]] for i in range(d)]
    basis = [n + i for i in range(d)]
    # objective: minimize sum of artificials (expressed in nonbasic terms)
    obj = [Fraction(0)] * (width + 1)
    for i in range(d):
        for j in range(width + 1):
            obj[j] += tab[i][j]
    for i in range(d):
        obj[n + i] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if j not in basis and obj[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(d):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # unbounded improvement cannot happen in phase 1
        _, row = best
        piv = tab[row][enter]
        tab[row] = [v / piv for v in tab[row]]
        for i in range(d):
            if i != row and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[row])]
        f = obj[enter]
        if f != 0:
            obj = [a - f * b for a, b in zip(obj, tab[row])]
        basis[row] = enter
    return obj[width] == 0
