"""Hilbert functions of graded modules presented by signed resolution shifts.

A module is described by its kappa numerator: a finite signed multiset of
shift vectors.  Multiplying the numerator into the ambient ring's Hilbert
series gives the module's Hilbert series, so pointwise values are signed
sums of counts.  Works in any grading dimension.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .chambers import chamber_complex_2xn, global_lattice, locate
from .counting import DegreeMatrix, count, series_coeffs
from .quasipoly import fit_chamber_qp


class DataIntegrityWarning(UserWarning):
    """A probed value came out negative: the shift data cannot be a genuine resolution."""


@dataclass(frozen=True)
class KappaNumerator:
    """Signed shifts presenting a module over the ring of the degree matrix."""

    ring: DegreeMatrix
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_terms(cls, ring: DegreeMatrix, terms) -> "KappaNumerator":
        merged: dict[tuple[int, ...], int] = {}
        for shift, coeff in dict(terms).items() if isinstance(terms, dict) else terms:
            shift = tuple(int(x) for x in shift)
            if len(shift) != ring.dim:
                raise ValueError("shift dimension mismatch")
            merged[shift] = merged.get(shift, 0) + int(coeff)
        clean = tuple(
            (shift, c) for shift, c in sorted(merged.items()) if c != 0
        )
        return cls(ring, clean)

    @property
    def shifts(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s, _ in self.terms)

    def coefficient(self, shift) -> int:
        shift = tuple(int(x) for x in shift)
        for s, c in self.terms:
            if s == shift:
                return c
        return 0

    def add(self, other: "KappaNumerator") -> "KappaNumerator":
        if self.ring != other.ring:
            raise ValueError("numerators over different rings")
        return KappaNumerator.from_terms(self.ring, list(self.terms) + list(other.terms))

    def is_zero(self) -> bool:
        return not self.terms


def hf_module(kappa: KappaNumerator, u) -> int:
    """Hilbert function value sum_a c_a * count(ring, u - a), exact."""
    u = tuple(int(x) for x in u)
    total = 0
    for shift, coeff in kappa.terms:
        total += coeff * count(kappa.ring, tuple(a - b for a, b in zip(u, shift)))
    if total < 0:
        warnings.warn(
            f"negative Hilbert value {total} at {u}: inconsistent shift data",
            DataIntegrityWarning,
            stacklevel=2,
        )
    return total


def series_identity_check(kappa: KappaNumerator, bound) -> bool:
    """Does the truncated product numerator * ring series match the value table?

    Compares, coefficientwise on [0, bound], the polynomial-times-series
    product against hf_module evaluated point by point.
    """
    bound = tuple(int(b) for b in bound)
    pad = [0] * kappa.ring.dim
    for shift, _ in kappa.terms:
        for i, s in enumerate(shift):
            pad[i] = max(pad[i], -s)
    ext = tuple(b + p for b, p in zip(bound, pad))
    table = series_coeffs(kappa.ring, ext)
    for u in itertools.product(*[range(b + 1) for b in bound]):
        lhs = 0
        for shift, coeff in kappa.terms:
            v = tuple(a - b for a, b in zip(u, shift))
            if all(x >= 0 for x in v):
                lhs += coeff * table[v]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DataIntegrityWarning)
            rhs = hf_module(kappa, u)
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class RingHilbertValue:
    """A Hilbert function value with the chamber and residue that selected it."""

    value: int
    chamber: int | None
    residue: tuple[int, ...] | None


@lru_cache(maxsize=64)
def _ring_chamber_data(degrees: tuple[int, ...]):
    ring = DegreeMatrix.bigraded(degrees)
    chambers = chamber_complex_2xn(sorted(degrees))
    lattice = global_lattice(degrees)
    fits = tuple(fit_chamber_qp(ring, c, lattice) for c in chambers)
    return ring, chambers, lattice, fits


def hf_bigraded_ring(degrees, u) -> RingHilbertValue:
    """Hilbert function of k[T_1..T_n] with deg T_i = (d_i, 1), with attribution.

    Returns the value together with the index of the (lowest) chamber whose
    closure contains u and the residue class that selected the polynomial
    piece; outside the positive cone the value is 0 with no attribution.
    """
    degrees = tuple(int(d) for d in degrees)
    u = (int(u[0]), int(u[1]))
    ring, chambers, lattice, fits = _ring_chamber_data(degrees)
    located = locate(chambers, u)
    if not located:
        return RingHilbertValue(0, None, None)
    idx = located[0]
    value = fits[idx].eval(u)
    if value.denominator != 1:
        raise RuntimeError(f"non-integer Hilbert value {value} at {u}")
    return RingHilbertValue(int(value), idx, lattice.reduce(u))
