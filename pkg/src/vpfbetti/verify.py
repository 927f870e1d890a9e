"""Verification suites: oracle equivalence, support, ordering, series identity.

Every check that fails carries a concrete witness point.  These are the
checks behind the `verify` CLI command and the acceptance tests.
"""

from __future__ import annotations

import hashlib
import time
import warnings
from dataclasses import dataclass, field

from .hilbert import DataIntegrityWarning, hf_module, series_identity_check
from .regions import RegionDecomposition, eval_betti, region_decomposition
from .rees import ToriSpec, serialize


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass
class RunReport:
    command: str
    input_digest: str
    checks: list[CheckResult] = field(default_factory=list)
    duration_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "duration_s": round(self.duration_s, 3),
        }

    def render(self) -> str:
        lines = [f"report for: {self.command}", f"input digest: {self.input_digest}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            if c.witness is not None:
                line += f" witness={tuple(c.witness)}"
            lines.append(line)
        lines.append(
            f"{'all checks passed' if self.passed else 'CHECKS FAILED'} "
            f"in {self.duration_s:.2f}s"
        )
        return "\n".join(lines)


def digest_of(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _grid_mu_range(dec: RegionDecomposition, t: int, pad: int = 5):
    if dec.degenerate:
        d = dec.degrees[0]
        bs = sorted(dec.ray_pieces)
        return d * t + bs[0] - pad, d * t + bs[-1] + pad
    lo = dec.lines[0].value(t)
    hi = dec.lines[-1].value(t)
    return lo - pad, hi + pad


def check_decomposition(dec: RegionDecomposition, tmax: int, pad: int = 5):
    """Oracle equivalence, support exactness, and line ordering up to tmax."""
    checks = []
    kappa = dec.kappa
    if tmax < dec.t0:
        checks.append(
            CheckResult(
                "oracle equivalence",
                True,
                detail=f"empty grid: tmax {tmax} below threshold {dec.t0}",
            )
        )
        return checks

    equiv_witness = None
    support_witness = None
    negative_witness = None
    for t in range(dec.t0, tmax + 1):
        lo, hi = _grid_mu_range(dec, t, pad)
        for mu in range(lo, hi + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DataIntegrityWarning)
                got = eval_betti(dec, mu, t)
                want = hf_module(kappa, (mu, t))
            if got != want and equiv_witness is None:
                equiv_witness = (mu, t, got, want)
            if (got == 0) != (want == 0) and support_witness is None:
                support_witness = (mu, t, got, want)
            if want < 0 and negative_witness is None:
                negative_witness = (mu, t, want)
        if equiv_witness and support_witness and negative_witness:
            break
    npoints = sum(
        _grid_mu_range(dec, t, pad)[1] - _grid_mu_range(dec, t, pad)[0] + 1
        for t in range(dec.t0, tmax + 1)
    )
    checks.append(
        CheckResult(
            "oracle equivalence",
            equiv_witness is None,
            witness=equiv_witness,
            detail=f"grid t={dec.t0}..{tmax}, {npoints} points",
        )
    )
    checks.append(
        CheckResult(
            "support exactness",
            support_witness is None,
            witness=support_witness,
            detail="zero exactly where the oracle is zero",
        )
    )
    checks.append(
        CheckResult(
            "nonnegative values",
            negative_witness is None,
            witness=negative_witness,
            detail="genuine syzygy dimensions cannot be negative",
        )
    )

    order_witness = None
    for t in range(dec.t0, tmax + 1):
        vals = [line.value(t) for line in dec.lines]
        if any(b < a for a, b in zip(vals, vals[1:])):
            order_witness = (t,)
            break
        slopes = [line.slope for line in dec.lines]
        if any(s2 < s1 for s1, s2 in zip(slopes, slopes[1:])):
            # slope blocks may not interleave once values are sorted
            for s1, s2 in zip(slopes, slopes[1:]):
                if s2 < s1:
                    order_witness = (t,)
                    break
            break
    checks.append(
        CheckResult(
            "line ordering",
            order_witness is None,
            witness=order_witness,
            detail=f"monotone values and slope blocks, t={dec.t0}..{tmax}",
        )
    )
    return checks


def verify_spec(spec: ToriSpec, tmax: int) -> RunReport:
    """Run every suite on every homological index of a shift specification."""
    start = time.perf_counter()
    report = RunReport(
        command=f"verify degrees={list(spec.degrees)} tmax={tmax}",
        input_digest=digest_of(serialize(spec)),
    )
    max_deg = max(spec.degrees)
    for index, kappa in spec.tors:
        prefix = f"tor{index}"
        if tmax <= 0:
            report.checks.append(
                CheckResult(
                    f"{prefix}: series identity",
                    True,
                    detail="empty grid (tmax <= 0); nothing checked",
                )
            )
            continue
        mu_bound = max_deg * tmax + max((s[0] for s, _ in kappa.terms), default=0) + 5
        ok = series_identity_check(kappa, (mu_bound, tmax))
        report.checks.append(
            CheckResult(
                f"{prefix}: series identity",
                ok,
                detail=f"coefficients up to ({mu_bound}, {tmax})",
            )
        )
        if kappa.is_zero():
            report.checks.append(
                CheckResult(f"{prefix}: decomposition", True, detail="empty numerator")
            )
            continue
        dec = region_decomposition(kappa)
        for check in check_decomposition(dec, tmax):
            check.name = f"{prefix}: {check.name}"
            report.checks.append(check)
    report.duration_s = time.perf_counter() - start
    return report
