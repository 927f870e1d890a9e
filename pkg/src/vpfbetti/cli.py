"""Command-line interface.

Commands: count, hilbert, chambers, regions, rees-ci, verify, reproduce.
All numeric output is exact; structured output is canonical JSON that can be
re-ingested.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import textfmt
from .chambers import DegenerateGradingError, chamber_complex_2xn, global_lattice
from .counting import DegreeMatrix, count
from .hilbert import hf_bigraded_ring, hf_module
from .lattices import IntMatrix, hnf
from .quasipoly import FitError
from .rees import SpecFormatError, UnsupportedRankError, ci_shifts, ingest, serialize
from .regions import eval_betti, region_decomposition
from .svgfig import regions_svg
from .verify import verify_spec


class UsageError(ValueError):
    pass


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"could not parse {what} {text!r}: comma-separated integers expected") from exc


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_spec(args) -> "ToriSpec":
    if getattr(args, "spec", None):
        with open(args.spec) as fh:
            return ingest(fh.read())
    if getattr(args, "degrees", None):
        return ci_shifts(_parse_int_list(args.degrees, "--degrees"))
    raise UsageError("provide --spec FILE or --degrees D1,D2,...")


def _cmd_count(args) -> int:
    point = _parse_int_list(args.point, "point")
    if args.matrix:
        with open(args.matrix) as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict) or "rows" not in doc:
            raise UsageError("matrix file must be JSON of the form {\"rows\": [[...], ...]}")
        rows = doc["rows"]
        A = DegreeMatrix.from_columns(list(zip(*rows)))
    elif args.degrees:
        A = DegreeMatrix.bigraded(_parse_int_list(args.degrees, "--degrees"))
    else:
        raise UsageError("provide --degrees or --matrix")
    if len(point) != A.dim:
        raise UsageError(f"point has {len(point)} coordinates, the grading has rank {A.dim}")
    _emit(f"{count(A, point)}\n", args.out)
    return 0


def _cmd_hilbert(args) -> int:
    point = _parse_int_list(args.point, "point")
    if args.spec or args.index is not None:
        spec = _load_spec(args)
        if args.index is None:
            raise UsageError("--index is required with --spec")
        kappa = spec.tor(args.index)
        if kappa is None:
            _emit(f"no shift data at homological index {args.index}\n", args.out)
            return 0
        value = hf_module(kappa, point)
        if args.format == "structured":
            _emit(textfmt.dumps_canonical({"point": point, "value": value}), args.out)
        else:
            _emit(f"{value}\n", args.out)
        return 0
    if not args.degrees:
        raise UsageError("provide --degrees (ring query) or --spec with --index (module query)")
    degrees = _parse_int_list(args.degrees, "--degrees")
    res = hf_bigraded_ring(degrees, point)
    if args.format == "structured":
        doc = {"point": point, "value": res.value}
        if res.chamber is not None:
            doc["chamber"] = res.chamber
            doc["residue"] = list(res.residue)
        _emit(textfmt.dumps_canonical(doc), args.out)
    else:
        line = f"{res.value}"
        if res.chamber is not None:
            line += f"  chamber=C{res.chamber + 1} residue={tuple(res.residue)}"
        _emit(line + "\n", args.out)
    return 0


def _cmd_chambers(args) -> int:
    degrees = _parse_int_list(args.degrees, "--degrees")
    chambers = chamber_complex_2xn(sorted(degrees))
    glattice = global_lattice(degrees)
    if args.format == "structured":
        doc = {
            "degrees": sorted(degrees),
            "global_lattice": textfmt.lattice_dict(glattice),
            "chambers": [
                {
                    "generators": [list(g) for g in c.generators],
                    "inequalities": [list(h) for h in c.inequalities],
                    "index_set": [list(p) for p in c.index_set],
                    "lattice": textfmt.lattice_dict(c.lattice),
                }
                for c in chambers
            ],
        }
        _emit(textfmt.dumps_canonical(doc), args.out)
        return 0
    if args.format == "csv":
        rows = ["chamber,lo,hi,ineq1,ineq2,det"]
        for i, c in enumerate(chambers):
            h1, h2 = c.inequalities
            rows.append(
                f"C{i+1},{c.generators[0][0]},{c.generators[1][0]},"
                f"{h1[0]}*mu+{h1[1]}*t>=0,{h2[0]}*mu+{h2[1]}*t>=0,{c.lattice.det}"
            )
        _emit("\n".join(rows) + "\n", args.out)
        return 0
    lines = [f"degrees: {sorted(degrees)}", f"global lattice det: {glattice.det}"]
    for i, c in enumerate(chambers):
        lo, hi = c.generators[0][0], c.generators[1][0]
        lines.append(
            f"C{i+1}: cone{{({lo},1),({hi},1)}}  "
            f"mu - {lo}t >= 0, {hi}t - mu >= 0  (lattice det {c.lattice.det})"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_regions(args) -> int:
    spec = _load_spec(args)
    kappa = spec.tor(args.index)
    if kappa is None or kappa.is_zero():
        _emit(f"empty decomposition: no shift data at homological index {args.index}\n", args.out)
        return 0
    dec = region_decomposition(kappa)
    if args.format == "structured":
        _emit(textfmt.dumps_canonical(textfmt.decomposition_dict(dec)), args.out)
        return 0
    if args.format == "svg":
        _emit(regions_svg(dec, args.tmax), args.out)
        return 0
    if args.format == "csv":
        rows = ["region,lower,upper,residue,poly"]
        for r in dec.regions:
            for res in sorted(r.piece.pieces):
                poly = textfmt.poly_str(r.piece.pieces[res], ("mu", "t"))
                rows.append(f"{r.lower},{textfmt.line_str(dec.lines[r.lower].slope, dec.lines[r.lower].intercept)},"
                            f"{textfmt.line_str(dec.lines[r.upper].slope, dec.lines[r.upper].intercept)},"
                            f"\"{list(res)}\",\"{poly}\"")
        _emit("\n".join(rows) + "\n", args.out)
        return 0
    lines = [
        f"stability threshold t0 = {dec.t0}",
        f"modulus D = {dec.modulus}",
        "lines (sorted):",
    ]
    for line in dec.lines:
        lines.append(f"  {textfmt.line_str(line.slope, line.intercept)}   through {line.through}")
    if dec.degenerate:
        lines.append("single-degree support: one polynomial per ray")
        for b, poly in sorted(dec.ray_pieces.items()):
            lines.append(
                f"  on {textfmt.line_str(dec.degrees[0], b)}: {textfmt.poly_str(poly, ('t',))}"
            )
    else:
        lines.append("regions (half-open [lower, upper), last closed):")
        for r in dec.regions:
            lo = textfmt.line_str(dec.lines[r.lower].slope, dec.lines[r.lower].intercept)
            hi = textfmt.line_str(dec.lines[r.upper].slope, dec.lines[r.upper].intercept)
            lines.append(f"  [{lo} .. {hi})")
            for res in sorted(r.piece.pieces):
                poly = textfmt.poly_str(r.piece.pieces[res], ("mu", "t"))
                lines.append(f"    residue {tuple(res)}: {poly}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_rees_ci(args) -> int:
    spec = ci_shifts(_parse_int_list(args.degrees, "--degrees"))
    _emit(serialize(spec), args.out)
    return 0


def _cmd_verify(args) -> int:
    spec = _load_spec(args)
    report = verify_spec(spec, args.tmax)
    if args.tmax <= 0:
        sys.stderr.write("warning: tmax <= 0 leaves every grid empty\n")
    if args.format == "structured":
        _emit(textfmt.dumps_canonical(report.to_dict()), args.out)
    else:
        _emit(report.render() + "\n", args.out)
    return 0 if report.passed else 1


def _cmd_reproduce(args) -> int:
    if args.example != "4.7":
        raise UsageError(f"unknown example id {args.example!r}; available: 4.7")
    out = []
    degrees = (2, 3, 6)
    spec = ci_shifts(degrees)
    out.append("worked example 4.7: complete intersection, generator degrees 2, 3, 6")
    out.append("")
    A = IntMatrix.from_rows([[2, 3, 6], [1, 1, 1]])
    H, U = hnf(A)
    out.append(f"degree matrix rows: {[list(r) for r in A.entries]}")
    out.append(f"column Hermite normal form H = {[list(r) for r in H.entries]}")
    out.append(f"unimodular U with H = A*U: {[list(r) for r in U.entries]}")
    out.append("")
    chambers = chamber_complex_2xn(degrees)
    for i, c in enumerate(chambers):
        lo, hi = c.generators[0][0], c.generators[1][0]
        out.append(f"chamber C{i+1}: mu - {lo}t >= 0, {hi}t - mu >= 0")
    glat = global_lattice(degrees)
    out.append(f"global lattice det = {glat.det}")
    out.append("")
    out.append("Hilbert function of the bigraded ring (validated pointwise):")
    out.append("  floor((mu - 2t)/4) + 1                      on C1")
    out.append("  floor((mu - 2t)/4) - (mu - 3t)/3 + 1        on C2, 3 | mu - 3t")
    out.append("  floor((mu - 2t)/4) - floor((mu - 3t)/3)     on C2 otherwise")
    out.append("")
    for index, kappa in spec.tors:
        dec = region_decomposition(kappa)
        out.append(f"homological index {index}: t0 = {dec.t0}, lines "
                   + ", ".join(textfmt.line_str(l.slope, l.intercept) for l in dec.lines))
    b1 = region_decomposition(spec.tor(1))
    sample = eval_betti(b1, 28, 10)
    out.append("")
    out.append(f"sample value at (mu, t) = (28, 10), index 1: {sample}")
    out.append("")
    out.append("consistency notes (both resolved in the counting oracle's favor):")
    out.append("  1. the piecewise form '(Q2 + Q2)' sometimes quoted for the strip")
    out.append("     6t - 1 <= mu < 6t + 2 fails oracle validation (e.g. value 0 vs 1")
    out.append("     at (36, 6)); the validated piece there is Q2 + Q3.")
    out.append("  2. a first-syzygy shift written (8, -1) instead of (8, 1) puts")
    out.append("     support at negative powers (e.g. nonzero at (10, 0)); shift")
    out.append("     documents reject negative T-degrees for this reason.")
    out.append("")
    report = verify_spec(spec, args.tmax)
    out.append(report.render())
    _emit("\n".join(out) + "\n", args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpfbetti",
        description=(
            "Exact vector partition functions, Hilbert functions of "
            "non-standard bigraded rings, and eventual piecewise tables of "
            "graded Betti numbers of ideal powers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate the vector partition function at a point")
    p.add_argument("point", help="comma-separated coordinates, e.g. 9,2")
    p.add_argument("--degrees", help="bigraded generator degrees, e.g. 2,3,6,7")
    p.add_argument("--matrix", help="JSON file {\"rows\": [[...], ...]} for general gradings")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("hilbert", help="Hilbert function of a ring or a presented module")
    p.add_argument("point", help="comma-separated bidegree, e.g. 12,2")
    p.add_argument("--degrees", help="ring query: generator degrees")
    p.add_argument("--spec", help="module query: shift document file")
    p.add_argument("--index", type=int, help="homological index for --spec")
    p.add_argument("--format", choices=("table", "structured"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("chambers", help="chamber decomposition of the positive cone")
    p.add_argument("--degrees", required=True)
    p.add_argument("--format", choices=("table", "structured", "csv"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("regions", help="region decomposition for one homological index")
    p.add_argument("--spec", help="shift document file")
    p.add_argument("--degrees", help="complete-intersection shortcut")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--format", choices=("table", "structured", "csv", "svg"), default="table")
    p.add_argument("--tmax", type=int, default=None, help="height range for svg output")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("rees-ci", help="emit shift data for a complete intersection")
    p.add_argument("--degrees", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_rees_ci)

    p = sub.add_parser("verify", help="run the oracle verification suites")
    p.add_argument("--spec")
    p.add_argument("--degrees")
    p.add_argument("--tmax", type=int, default=40)
    p.add_argument("--format", choices=("table", "structured"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reproduce", help="re-derive the bundled worked example end to end")
    p.add_argument("example", nargs="?", default="4.7")
    p.add_argument("--tmax", type=int, default=40)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpecFormatError, UnsupportedRankError, DegenerateGradingError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FitError as exc:
        sys.stderr.write(f"verification error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
