"""Canonical structured rendering shared by the CLI, file formats, and reports.

Rationals are rendered reduced as "p/q" (or "p"), keys are sorted, and all
emitters are deterministic: identical inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lattices import Lattice
from .quasipoly import Polynomial, QuasiPolynomial
from .regions import RegionDecomposition


def frac_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def poly_dict(p: Polynomial) -> dict:
    return {
        "terms": [
            {"exp": list(exp), "coeff": frac_str(p.terms[exp])}
            for exp in sorted(p.terms)
        ]
    }


def poly_str(p: Polynomial, names) -> str:
    """Human-readable rendering like '1/4*mu - 1/2*t + 1'."""
    if not p.terms:
        return "0"
    bits = []
    for exp in sorted(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        coeff = p.terms[exp]
        mono = "*".join(
            f"{names[i]}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exp)
            if e
        )
        if mono:
            if coeff == 1:
                bits.append(mono)
            elif coeff == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{frac_str(coeff)}*{mono}")
        else:
            bits.append(frac_str(coeff))
    out = bits[0]
    for b in bits[1:]:
        out += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
    return out


def lattice_dict(L: Lattice) -> dict:
    return {"basis": [list(b) for b in L.basis], "det": L.det}


def qp_dict(q: QuasiPolynomial) -> dict:
    return {
        "lattice": lattice_dict(q.lattice),
        "pieces": [
            {"residue": list(res), "poly": poly_dict(q.pieces[res])}
            for res in sorted(q.pieces)
        ],
    }


def line_dict(line) -> dict:
    return {
        "slope": line.slope,
        "intercept": line.intercept,
        "through": list(line.through),
    }


def decomposition_dict(dec: RegionDecomposition) -> dict:
    out = {
        "t0": dec.t0,
        "modulus": dec.modulus,
        "degrees": list(dec.degrees),
        "lines": [line_dict(line) for line in dec.lines],
    }
    if dec.lattice is not None:
        out["lattice"] = lattice_dict(dec.lattice)
    if dec.degenerate:
        out["rays"] = [
            {"intercept": b, "poly": poly_dict(p)}
            for b, p in sorted(dec.ray_pieces.items())
        ]
    else:
        out["regions"] = [
            {
                "lower": r.lower,
                "upper": r.upper,
                "pieces": [
                    {"residue": list(res), "poly": poly_dict(r.piece.pieces[res])}
                    for res in sorted(r.piece.pieces)
                ],
            }
            for r in dec.regions
        ]
    return out


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def line_str(slope: int, intercept: int) -> str:
    if intercept == 0:
        return f"mu = {slope}t"
    sign = "+" if intercept > 0 else "-"
    return f"mu = {slope}t {sign} {abs(intercept)}"
