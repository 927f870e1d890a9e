"""Quasi-polynomials with respect to a lattice, and their exact recovery.

A quasi-polynomial stores one rational-coefficient polynomial per residue
class of a full-rank sublattice of Z^d.  fit_chamber_qp reconstructs the
counting function of a degree matrix on a closed planar chamber by exact
interpolation per residue class, then validates the result on points it did
not fit; a mismatch is a hard structural error, never a silent repair.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd

from .chambers import Chamber
from .counting import DegreeMatrix, count
from .lattices import Lattice, lattice_from_columns


class FitError(RuntimeError):
    """No polynomial of the expected degree matches the counts (bad chamber or lattice)."""


class LatticeMismatchError(ValueError):
    """Operands are quasi-polynomials over different lattices."""


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        data = dict(terms) if not isinstance(terms, dict) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in data.items():
            c = Fraction(coeff)
            if c != 0:
                clean[tuple(int(e) for e in exp)] = c
        self.nvars = int(nvars)
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {tuple(0 for _ in range(nvars)): Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exp: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def eval(self, point) -> Fraction:
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exp):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + v
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + v1 * v2
        return Polynomial(self.nvars, out)

    def compose_affine(self, matrix_rows, offset) -> "Polynomial":
        """p(M x + c) as a polynomial in the new variables x."""
        nv = len(matrix_rows[0])
        lin = []
        for row, c in zip(matrix_rows, offset):
            terms = {tuple(0 for _ in range(nv)): Fraction(c)}
            for j, a in enumerate(row):
                if a:
                    exp = tuple(1 if k == j else 0 for k in range(nv))
                    terms[exp] = Fraction(a)
            lin.append(Polynomial(nv, terms))
        out = Polynomial.zero(nv)
        powers: list[dict[int, Polynomial]] = [
            {0: Polynomial.constant(nv, 1)} for _ in lin
        ]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * lin[i]
            return cache[e]

        for exp, coeff in self.terms.items():
            term = Polynomial.constant(nv, coeff)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def shifted(self, a) -> "Polynomial":
        """p(x - a)."""
        n = self.nvars
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return self.compose_affine(ident, [-x for x in a])

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            c = self.terms[exp]
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(bits) + ")"


class QuasiPolynomial:
    """One polynomial per residue class of a full-rank lattice in Z^d."""

    __slots__ = ("lattice", "pieces")

    def __init__(self, lattice: Lattice, pieces):
        keys = lattice.residues()
        table = dict(pieces)
        extra = set(table) - set(keys)
        if extra:
            raise ValueError(f"piece keys not among canonical residues: {sorted(extra)}")
        self.lattice = lattice
        self.pieces = {
            k: table.get(k, Polynomial.zero(lattice.dim)) for k in keys
        }

    @classmethod
    def zero(cls, lattice: Lattice) -> "QuasiPolynomial":
        return cls(lattice, {})

    @classmethod
    def constant(cls, lattice: Lattice, value) -> "QuasiPolynomial":
        c = Polynomial.constant(lattice.dim, value)
        return cls(lattice, {k: c for k in lattice.residues()})

    def piece_at(self, u):
        key = self.lattice.reduce(u)
        return key, self.pieces[key]

    def eval(self, u) -> Fraction:
        _, piece = self.piece_at(u)
        return piece.eval(u)

    def shift(self, a, c=1) -> "QuasiPolynomial":
        """r with r(x) = c * self(x - a), realized by re-keying the pieces."""
        a = tuple(int(x) for x in a)
        c = Fraction(c)
        out = {}
        for key, piece in self.pieces.items():
            new_key = self.lattice.reduce(tuple(k + s for k, s in zip(key, a)))
            out[new_key] = piece.shifted(a).scale(c)
        return QuasiPolynomial(self.lattice, out)

    def scale(self, c) -> "QuasiPolynomial":
        return QuasiPolynomial(
            self.lattice, {k: p.scale(c) for k, p in self.pieces.items()}
        )

    def add(self, other: "QuasiPolynomial") -> "QuasiPolynomial":
        if self.lattice != other.lattice:
            raise LatticeMismatchError(
                "operands use different lattices; refine to a common sublattice first"
            )
        return QuasiPolynomial(
            self.lattice,
            {k: self.pieces[k] + other.pieces[k] for k in self.pieces},
        )

    def __add__(self, other):
        return self.add(other)

    def restrict_to(self, sub: Lattice) -> "QuasiPolynomial":
        """The same function presented over a full-rank sublattice."""
        if not sub.is_sublattice_of(self.lattice):
            raise LatticeMismatchError("target is not a sublattice")
        return QuasiPolynomial(
            sub, {k: self.pieces[self.lattice.reduce(k)] for k in sub.residues()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuasiPolynomial)
            and self.lattice == other.lattice
            and self.pieces == other.pieces
        )

    def __repr__(self):
        return f"QuasiPolynomial(det={self.lattice.det}, pieces={len(self.pieces)})"


def equal_on_region(q1, q2, predicate, bound) -> bool:
    """Pointwise equality on every integer point of [0, bound] passing the predicate."""
    ranges = [range(int(b) + 1) for b in bound]
    for u in itertools.product(*ranges):
        if predicate(u) and q1.eval(u) != q2.eval(u):
            return False
    return True


def _ceildiv(a: int, b: int) -> int:
    return -((-a) // b)


def _round_fraction(f: Fraction) -> int:
    """Nearest integer, ties toward +infinity; exact."""
    return (2 * f.numerator + f.denominator) // (2 * f.denominator)


def _lagrange_gauss(v1, v2):
    """Shortest basis of the rank-2 lattice spanned by v1 and v2."""
    v1, v2 = list(v1), list(v2)

    def norm(v):
        return v[0] * v[0] + v[1] * v[1]

    def dot(a, b):
        return a[0] * b[0] + a[1] * b[1]

    if norm(v1) < norm(v2):
        v1, v2 = v2, v1
    while True:
        q = _round_fraction(Fraction(dot(v1, v2), norm(v2)))
        v1 = [a - q * b for a, b in zip(v1, v2)]
        if norm(v1) >= norm(v2):
            break
        v1, v2 = v2, v1
    return tuple(v2), tuple(v1)


def _invert_fractions(rows):
    """Inverse of a small square matrix over Q; None when singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _window_points(chamber: Chamber, s_max: int):
    """Integer points of the closed chamber with height H1 + H2 <= s_max."""
    h1, h2 = chamber.inequalities
    h = (h1[0] + h2[0], h1[1] + h2[1])
    g1, g2 = chamber.generators

    def height(g):
        return h[0] * g[0] + h[1] * g[1]

    span = max(Fraction(g[1], height(g)) for g in (g1, g2) if height(g) > 0)
    y_max = int(Fraction(s_max) * span)
    for y in range(0, y_max + 1):
        lo, hi = None, None
        feasible = True
        for hx, hy, rhs in ((h1[0], h1[1], 0), (h2[0], h2[1], 0), (-h[0], -h[1], -s_max)):
            r = rhs - hy * y
            if hx > 0:
                b = _ceildiv(r, hx)
                lo = b if lo is None else max(lo, b)
            elif hx < 0:
                b = r // hx
                hi = b if hi is None else min(hi, b)
            elif r > 0:
                feasible = False
                break
        if not feasible or lo is None or hi is None:
            continue
        for x in range(lo, hi + 1):
            yield (x, y)


def _anchor_shift(z, v1, v2):
    """Cheapest translate z + j1*v1 + j2*v2 (j >= 0) into the closed quadrant."""
    d = (max(0, -z[0]), max(0, -z[1]))
    if d == (0, 0):
        return z
    best = None

    def consider(j1, j2):
        nonlocal best
        a = (z[0] + j1 * v1[0] + j2 * v2[0], z[1] + j1 * v1[1] + j2 * v2[1])
        if a[0] < 0 or a[1] < 0:
            return
        if best is None or a[0] + a[1] < best[0] + best[1]:
            best = a

    def fill(primary, secondary, flip):
        cand = {0}
        for i in range(2):
            if primary[i] > 0 and d[i] > 0:
                cand.add(_ceildiv(d[i], primary[i]))
        for jp in cand:
            js = 0
            ok = True
            for i in range(2):
                rem = d[i] - jp * primary[i]
                if rem > 0:
                    if secondary[i] > 0:
                        js = max(js, _ceildiv(rem, secondary[i]))
                    else:
                        ok = False
                        break
            if ok:
                consider(js if flip else jp, jp if flip else js)

    fill(v1, v2, flip=False)
    fill(v2, v1, flip=True)
    if best is None:
        # v1 + v2 is strictly positive componentwise, so this always works
        s = (v1[0] + v2[0], v1[1] + v2[1])
        j = max(_ceildiv(d[0], s[0]), _ceildiv(d[1], s[1]))
        best = (z[0] + j * s[0], z[1] + j * s[1])
    return best


def _quadrant_basis(lattice, to_z):
    """Two short independent lattice images with nonnegative cone coordinates.

    Offsets built from such a basis always point into the cone, so anchors
    can sit right at the residue representatives.  Candidates come from small
    combinations of a Lagrange-Gauss reduced basis; the canonical triangular
    basis of the image lattice is the always-available fallback.
    """
    z1, z2 = to_z(lattice.basis[0]), to_z(lattice.basis[1])
    w1, w2 = _lagrange_gauss(z1, z2)
    cands = []
    for a in range(-12, 13):
        for b in range(-12, 13):
            v = (a * w1[0] + b * w2[0], a * w1[1] + b * w2[1])
            if v != (0, 0) and v[0] >= 0 and v[1] >= 0:
                cands.append(v)
    cands.extend(lattice_from_columns([z1, z2]).basis)
    cands.sort(key=lambda v: (v[0] + v[1], v))
    best = cands[0]
    for v in cands[1:]:
        if best[0] * v[1] - best[1] * v[0] != 0:
            return best, v
    raise FitError("internal: could not build a nonnegative lattice basis")


def _design_k_points(deg: int, extra: int):
    """Triangular interpolation grid plus a disjoint validation grid.

    The fit points {k >= 0 : k1 + k2 <= deg} are a principal lattice, which
    is unisolvent for total degree <= deg.  Validation points are the other
    points of the smallest box [0, K]^2 holding `extra` of them, keeping the
    whole pattern as compact as possible.
    """
    fit = [(i, s - i) for s in range(deg + 1) for i in range(s, -1, -1)]
    in_fit = set(fit)
    K = deg
    while (K + 1) ** 2 - len(fit) < extra:
        K += 1
    val = [
        k
        for k in sorted(
            ((i, j) for i in range(K + 1) for j in range(K + 1)),
            key=lambda e: (sum(e), e),
        )
        if k not in in_fit
    ][:extra]
    return fit, val


def pattern_extent_estimate(chamber, lattice, deg: int, validate_factor: int = 3):
    """Rough upper bounds (max height t, count-table cells) for a chamber fit.

    Cheap to evaluate (no residue enumeration), so callers can skip instances
    whose exact per-residue interpolation would not fit a sane budget.
    """
    h1, h2 = chamber.inequalities

    def to_z(u):
        return (h1[0] * u[0] + h1[1] * u[1], h2[0] * u[0] + h2[1] * u[1])

    v1, v2 = _quadrant_basis(lattice, to_z)
    m = (deg + 1) * (deg + 2) // 2
    fit_k, val_k = _design_k_points(deg, validate_factor * m)
    kmax = max(k[0] + k[1] for k in fit_k + val_k)
    p = lattice.basis[0][0]
    q = lattice.basis[1][1]
    corners = [(0, 0), (p, 0), (0, q), (p, q)]
    zs = [to_z(c) for c in corners]
    anchor_bound = (
        max(abs(z[0]) for z in zs)
        + max(abs(z[1]) for z in zs)
        + v1[0] + v1[1] + v2[0] + v2[1]
    )
    extent = kmax * (v1[0] + v1[1] + v2[0] + v2[1])
    de = h1[0] * h2[1] - h1[1] * h2[0]
    tmax = (anchor_bound + extent) // abs(de) + 1
    g_hi = max(chamber.generators[0][0], chamber.generators[1][0])
    cells = (tmax + 1) * (g_hi * tmax + 1)
    return tmax, cells


def fit_chamber_qp(
    A: DegreeMatrix,
    chamber: Chamber,
    lattice: Lattice,
    *,
    validate_factor: int = 3,
) -> QuasiPolynomial:
    """Recover the counting quasi-polynomial of A on a closed planar chamber.

    The lattice must be the chamber lattice or any full-rank sublattice of
    it.  Per residue class, a polynomial of total degree at most n - d is
    interpolated through a fixed unisolvent pattern of lattice translates
    anchored deep inside the chamber, then checked on `validate_factor`
    times as many held-out pattern points; finally the assembled pieces are
    swept against the counts on a window at the apex of the chamber, which
    exercises both boundary rays.  Any mismatch raises FitError: wrong
    chamber or lattice input, never silently repaired.
    """
    if A.dim != 2:
        raise ValueError("chamber fitting is implemented for planar gradings only")
    if validate_factor < 1:
        raise ValueError("validate_factor must be at least 1")
    deg = A.size - A.dim
    if deg < 0:
        raise ValueError("need at least as many columns as the grading rank")
    monos = sorted(
        ((i, j) for i in range(deg + 1) for j in range(deg + 1 - i)),
        key=lambda e: (sum(e), e),
    )
    m = len(monos)
    h1, h2 = chamber.inequalities
    det_t = h1[0] * h2[1] - h1[1] * h2[0]
    if det_t == 0:
        raise ValueError("chamber inequalities are linearly dependent")

    def to_z(u):
        return (h1[0] * u[0] + h1[1] * u[1], h2[0] * u[0] + h2[1] * u[1])

    def to_u(z):
        # inverse of to_z; exact on images of integer points
        a = h2[1] * z[0] - h1[1] * z[1]
        b = -h2[0] * z[0] + h1[0] * z[1]
        if a % det_t or b % det_t:
            raise FitError("internal: point is not an integer-point image")
        return (a // det_t, b // det_t)

    w1, w2 = _quadrant_basis(lattice, to_z)
    det_w = w1[0] * w2[1] - w1[1] * w2[0]
    fit_k, val_k = _design_k_points(deg, validate_factor * m)
    all_k = fit_k + val_k

    design = [[k[0] ** i * k[1] ** j for (i, j) in monos] for k in fit_k]
    inv = _invert_fractions(design)
    if inv is None:
        raise FitError("internal: interpolation design is singular")

    def offset(k):
        return (k[0] * w1[0] + k[1] * w2[0], k[0] * w1[1] + k[1] * w2[1])

    offsets = [offset(k) for k in all_k]

    # integer form of the design inverse: coefficient numerators over inv_den
    inv_den = 1
    for row in inv:
        for f in row:
            inv_den = inv_den * f.denominator // gcd(inv_den, f.denominator)
    inv_num = [[int(f * inv_den) for f in row] for row in inv]

    # k = W^-1 (z - anchor) with z = T u: the linear part is shared by every
    # residue class, so precompute the monomial products in it once
    lin1 = Polynomial(
        2,
        {
            (1, 0): Fraction(w2[1] * h1[0] - w2[0] * h2[0], det_w),
            (0, 1): Fraction(w2[1] * h1[1] - w2[0] * h2[1], det_w),
        },
    )
    lin2 = Polynomial(
        2,
        {
            (1, 0): Fraction(-w1[1] * h1[0] + w1[0] * h2[0], det_w),
            (0, 1): Fraction(-w1[1] * h1[1] + w1[0] * h2[1], det_w),
        },
    )
    lin_products: dict[tuple[int, int], Polynomial] = {}
    p1 = Polynomial.constant(2, 1)
    for i in range(deg + 1):
        p12 = p1
        for j in range(deg + 1 - i):
            lin_products[(i, j)] = p12
            p12 = p12 * lin2
        p1 = p1 * lin1

    pieces = {}
    for res in lattice.residues():
        # translate the representative into the cone as cheaply as possible
        anchor = _anchor_shift(to_z(res), w1, w2)
        u_pts = [to_u((anchor[0] + o[0], anchor[1] + o[1])) for o in offsets]
        vals = [count(A, u) for u in u_pts]
        nums = [
            sum(f * v for f, v in zip(row, vals[:m]) if f) for row in inv_num
        ]
        for k, v in zip(val_k, vals[m:]):
            acc = 0
            for (i, j), num in zip(monos, nums):
                if num:
                    acc += num * k[0] ** i * k[1] ** j
            if acc != v * inv_den:
                raise FitError(
                    f"validation failed at "
                    f"{to_u((anchor[0] + offset(k)[0], anchor[1] + offset(k)[1]))} "
                    f"for residue {res}: wrong chamber or lattice input"
                )
        # expand p(k1, k2) with k_i = lin_i + c_i by binomial sums over the
        # precomputed products of the shared linear parts
        c1 = Fraction(-(w2[1] * anchor[0] - w2[0] * anchor[1]), det_w)
        c2 = Fraction(-(-w1[1] * anchor[0] + w1[0] * anchor[1]), det_w)
        c1p = [Fraction(1)]
        c2p = [Fraction(1)]
        for _ in range(deg):
            c1p.append(c1p[-1] * c1)
            c2p.append(c2p[-1] * c2)
        scalars: dict[tuple[int, int], Fraction] = {}
        for (i, j), num in zip(monos, nums):
            if not num:
                continue
            coeff = Fraction(num, inv_den)
            for a in range(i + 1):
                for b in range(j + 1):
                    key = (a, b)
                    add = coeff * comb(i, a) * comb(j, b) * c1p[i - a] * c2p[j - b]
                    scalars[key] = scalars.get(key, Fraction(0)) + add
        terms: dict[tuple[int, int], Fraction] = {}
        for key, s in scalars.items():
            if not s:
                continue
            for exp, c in lin_products[key].terms.items():
                terms[exp] = terms.get(exp, Fraction(0)) + s * c
        pieces[res] = Polynomial(2, terms)

    result = QuasiPolynomial(lattice, pieces)
    # apex-window sweep: covers the tip and stretches of both boundary rays
    g1, g2 = chamber.generators
    hg = min(
        h1[0] * g2[0] + h1[1] * g2[1],
        h2[0] * g1[0] + h2[1] * g1[1],
    )
    s_val = 4 * hg
    cross = abs(g1[0] * g2[1] - g1[1] * g2[0])
    while s_val * s_val * cross < 512 * (2 * hg) * (2 * hg):
        s_val *= 2
    checked = 0
    for u in _window_points(chamber, s_val):
        if result.eval(u) != count(A, u):
            raise FitError(
                f"boundary sweep failed at {u}: wrong chamber or lattice input"
            )
        checked += 1
        if checked >= 4096:
            break
    return result
