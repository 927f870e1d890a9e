"""Exact vector partition functions, multigraded Hilbert functions, and the
eventual piecewise quasi-polynomial tables of graded Betti numbers of ideal
powers.  All arithmetic is exact (arbitrary-precision integers and
rationals); the hot counting kernel optionally runs as a compiled extension.
"""

from .chambers import (
    Chamber,
    DegenerateGradingError,
    chamber_complex_2xn,
    chamber_from_generators,
    global_lattice,
    locate,
)
from .counting import DegreeMatrix, count, in_pos_cone, series_coeffs
from .hilbert import (
    DataIntegrityWarning,
    KappaNumerator,
    RingHilbertValue,
    hf_bigraded_ring,
    hf_module,
    series_identity_check,
)
from .kernels import HAVE_COMPILED as compiled_kernels_available
from .lattices import (
    IntMatrix,
    Lattice,
    RankError,
    hnf,
    lattice_from_columns,
    lattice_intersect,
    residues,
    solve_exact,
)
from .quasipoly import (
    FitError,
    LatticeMismatchError,
    Polynomial,
    QuasiPolynomial,
    equal_on_region,
    fit_chamber_qp,
)
from .rees import (
    SpecFormatError,
    ToriSpec,
    UnsupportedRankError,
    ci_shifts,
    ingest,
    serialize,
)
from .regions import (
    BelowThresholdError,
    HalfLine,
    Region,
    RegionDecomposition,
    eval_betti,
    region_decomposition,
    sort_lines,
    stability_threshold,
    total_betti_polynomial,
)
from .verify import RunReport, verify_spec

__version__ = "0.1.0"

__all__ = [
    "BelowThresholdError",
    "Chamber",
    "DataIntegrityWarning",
    "DegenerateGradingError",
    "DegreeMatrix",
    "FitError",
    "HalfLine",
    "IntMatrix",
    "KappaNumerator",
    "Lattice",
    "LatticeMismatchError",
    "Polynomial",
    "QuasiPolynomial",
    "RankError",
    "Region",
    "RegionDecomposition",
    "RingHilbertValue",
    "RunReport",
    "SpecFormatError",
    "ToriSpec",
    "UnsupportedRankError",
    "chamber_complex_2xn",
    "chamber_from_generators",
    "ci_shifts",
    "compiled_kernels_available",
    "count",
    "equal_on_region",
    "eval_betti",
    "fit_chamber_qp",
    "global_lattice",
    "hf_bigraded_ring",
    "hf_module",
    "hnf",
    "in_pos_cone",
    "ingest",
    "lattice_from_columns",
    "lattice_intersect",
    "locate",
    "region_decomposition",
    "residues",
    "serialize",
    "series_coeffs",
    "series_identity_check",
    "solve_exact",
    "sort_lines",
    "stability_threshold",
    "total_betti_polynomial",
    "verify_spec",
]
