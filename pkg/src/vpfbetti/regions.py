"""Eventual piecewise description of shifted-module Hilbert functions.

For a module over a bigraded ring, presented by signed shifts, the plane
splits for t >= t0 into strips between sorted half-lines of slopes drawn
from the generator degrees; on each strip the value is one quasi-polynomial.
The construction here: stability threshold from pairwise line intersections,
stable sorting of the lines, and per-strip signed sums of shifted chamber
quasi-polynomials, with every piece oracle-checkable against hf_module.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .chambers import chamber_complex_2xn, global_lattice, locate
from .hilbert import DataIntegrityWarning, KappaNumerator, hf_module
from .lattices import Lattice, solve_exact
from .quasipoly import FitError, Polynomial, QuasiPolynomial, fit_chamber_qp


class BelowThresholdError(ValueError):
    """Query below the stability threshold; evaluate hf_module directly instead."""


@dataclass(frozen=True)
class HalfLine:
    """The half-line mu = slope * t + intercept through a shift point."""

    slope: int
    intercept: int
    through: tuple[int, int]

    def value(self, t: int) -> int:
        return self.slope * t + self.intercept


@dataclass(frozen=True, eq=False)
class Region:
    """Strip between consecutive sorted lines, carrying its quasi-polynomial."""

    lower: int
    upper: int
    piece: QuasiPolynomial


@dataclass(frozen=True, eq=False)
class RegionDecomposition:
    t0: int
    lines: tuple[HalfLine, ...]
    modulus: int
    lattice: Lattice | None
    regions: tuple[Region, ...]
    kappa: KappaNumerator
    degrees: tuple[int, ...]
    ray_pieces: dict = field(default_factory=dict)

    @property
    def degenerate(self) -> bool:
        return len(self.degrees) == 1


def _intercept(shift, slope: int) -> int:
    return shift[0] - slope * shift[1]


def intersection_height(line1: HalfLine, line2: HalfLine) -> Fraction | None:
    """Second coordinate where two half-lines of distinct slopes meet.

    Computed by the determinant expression
    (det[[b1', a'], [b2', 1]] - det[[b1, a], [b2, 1]]) / (a - a'),
    where the lines have slopes a, a' through shift points (b1, b2), (b1', b2').
    """
    if line1.slope == line2.slope:
        return None
    det2 = line2.through[0] - line2.slope * line2.through[1]
    det1 = line1.through[0] - line1.slope * line1.through[1]
    return Fraction(det2 - det1, line1.slope - line2.slope)


def _ceil_fraction(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def all_half_lines(shifts, degrees) -> list[HalfLine]:
    return [
        HalfLine(a, _intercept(s, a), (int(s[0]), int(s[1])))
        for s in shifts
        for a in degrees
    ]


def stability_threshold(shifts, degrees) -> int:
    """Smallest safe integer height: the ordering of the half-lines through
    the shift points is fixed beyond the largest pairwise intersection."""
    degrees = sorted(set(int(d) for d in degrees))
    lines = all_half_lines(shifts, degrees)
    best = Fraction(0)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            y = intersection_height(lines[i], lines[j])
            if y is not None and y > best:
                best = y
    return max(1, _ceil_fraction(best))


def sort_lines(shifts, degrees, t0: int) -> tuple[HalfLine, ...]:
    """All N*r half-lines sorted by value at t0 + 1; ties by (slope, intercept)."""
    degrees = sorted(set(int(d) for d in degrees))
    lines = all_half_lines(shifts, degrees)
    lines.sort(key=lambda L: (L.value(t0 + 1), L.slope, L.intercept))
    return tuple(lines)


def _binomial_in_t(shift_t: int, n: int) -> Polynomial:
    """C(t - shift_t + n - 1, n - 1) as a polynomial in t (one variable)."""
    poly = Polynomial.constant(1, Fraction(1, factorial(n - 1)))
    for k in range(1, n):
        poly = poly * Polynomial(1, {(1,): 1, (0,): k - shift_t})
    return poly


def _degenerate_decomposition(kappa: KappaNumerator, d: int) -> RegionDecomposition:
    # single distinct degree: the support is a family of parallel rays
    # mu = d*t + b, each carrying a one-variable polynomial in t
    n = kappa.ring.size
    shifts = kappa.shifts
    t0 = max([1] + [s[1] for s in shifts])
    lines = sort_lines(shifts, (d,), t0)
    rays: dict[int, Polynomial] = {}
    for shift, coeff in kappa.terms:
        b = _intercept(shift, d)
        poly = _binomial_in_t(shift[1], n).scale(coeff)
        rays[b] = rays.get(b, Polynomial.zero(1)) + poly
    return RegionDecomposition(
        t0=t0,
        lines=lines,
        modulus=1,
        lattice=None,
        regions=(),
        kappa=kappa,
        degrees=(d,),
        ray_pieces=rays,
    )


def region_decomposition(kappa: KappaNumerator, degrees=None) -> RegionDecomposition:
    """Threshold, sorted lines, and one quasi-polynomial per inter-line strip.

    Strips follow the half-open convention [L_i(t), L_{i+1}(t)), with the
    last strip closed above.  Each strip's piece is the signed sum over the
    numerator terms of the shifted chamber quasi-polynomial attributed by
    probing the strip's lower edge at t0 + 1; oracle equivalence of the
    result is checked by the verification suite, not assumed.
    """
    ring = kappa.ring
    if not ring.is_bigraded():
        raise ValueError("region decompositions require a bigraded ring")
    E = tuple(sorted(set(ring.degrees)))
    if degrees is not None and tuple(sorted(set(int(x) for x in degrees))) != E:
        raise ValueError("degree set does not match the ring of the numerator")
    if kappa.is_zero():
        return RegionDecomposition(
            t0=1, lines=(), modulus=1, lattice=None, regions=(),
            kappa=kappa, degrees=E,
        )
    if len(E) == 1:
        return _degenerate_decomposition(kappa, E[0])

    shifts = kappa.shifts
    t0 = stability_threshold(shifts, E)
    lines = sort_lines(shifts, E, t0)
    lattice = global_lattice(E)
    chambers = chamber_complex_2xn(sorted(ring.degrees))
    fits = [fit_chamber_qp(ring, c, lattice) for c in chambers]

    t_probe = t0 + 1
    regions = []
    for i in range(len(lines) - 1):
        mu_probe = lines[i].value(t_probe)
        piece = QuasiPolynomial.zero(lattice)
        for shift, coeff in kappa.terms:
            probe = (mu_probe - shift[0], t_probe - shift[1])
            located = locate(chambers, probe)
            if not located:
                continue
            # on a shared wall the higher chamber is the one valid on the
            # strip above the probe line as well as on the line itself
            piece = piece.add(fits[located[-1]].shift(shift, coeff))
        regions.append(Region(lower=i, upper=i + 1, piece=piece))
    return RegionDecomposition(
        t0=t0,
        lines=lines,
        modulus=lattice.det,
        lattice=lattice,
        regions=tuple(regions),
        kappa=kappa,
        degrees=E,
    )


def eval_betti(dec: RegionDecomposition, mu: int, t: int) -> int:
    """Evaluate the decomposition at (mu, t); zero outside the line support.

    Only valid in the stable range t >= t0; below it, callers must use
    hf_module on the numerator directly.
    """
    mu = int(mu)
    t = int(t)
    if t < dec.t0:
        raise BelowThresholdError(
            f"t = {t} is below the stability threshold {dec.t0}; use hf_module"
        )
    if dec.degenerate:
        b = mu - dec.degrees[0] * t
        poly = dec.ray_pieces.get(b)
        if poly is None:
            return 0
        return _as_int(poly.eval((t,)), (mu, t))
    if not dec.lines:
        return 0
    vals = [line.value(t) for line in dec.lines]
    if mu < vals[0] or mu > vals[-1]:
        return 0
    idx = None
    for i in range(len(vals) - 1):
        if vals[i] <= mu < vals[i + 1]:
            idx = i
            break
    if idx is None:
        idx = len(vals) - 2  # mu == vals[-1]: the last strip is closed above
    value = dec.regions[idx].piece.eval((mu, t))
    return _as_int(value, (mu, t))


def _as_int(value: Fraction, point) -> int:
    if value.denominator != 1:
        raise RuntimeError(f"non-integer piece value {value} at {point}")
    v = int(value)
    if v < 0:
        warnings.warn(
            f"negative value {v} at {point}: inconsistent shift data",
            DataIntegrityWarning,
            stacklevel=3,
        )
    return v


def total_betti_polynomial(dec: RegionDecomposition, validate_points: int = 4) -> Polynomial:
    """The eventual polynomial t -> sum_mu eval_betti(mu, t), fitted exactly.

    Interpolates on t = t0 .. t0 + n (n = number of ring generators) and
    validates on the next `validate_points` heights; a mismatch would mean
    the decomposition is broken and raises FitError.
    """
    n = dec.kappa.ring.size

    def row_sum(t: int) -> int:
        if dec.degenerate:
            return sum(
                _as_int(p.eval((t,)), (b, t)) for b, p in dec.ray_pieces.items()
            )
        if not dec.lines:
            return 0
        lo = dec.lines[0].value(t)
        hi = dec.lines[-1].value(t)
        return sum(eval_betti(dec, mu, t) for mu in range(lo, hi + 1))

    ts = list(range(dec.t0, dec.t0 + n + 1))
    rows = [[Fraction(t) ** k for k in range(n + 1)] for t in ts]
    sol = solve_exact(rows, [row_sum(t) for t in ts])
    if sol is None:
        raise FitError("impossible: square Vandermonde system was inconsistent")
    poly = Polynomial(1, {(k,): c for k, c in enumerate(sol)})
    for t in range(dec.t0 + n + 1, dec.t0 + n + 1 + validate_points):
        if poly.eval((t,)) != row_sum(t):
            raise FitError(
                f"eventual polynomial validation failed at t = {t}: "
                "the decomposition disagrees with itself"
            )
    return poly
