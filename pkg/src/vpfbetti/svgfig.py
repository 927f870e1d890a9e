"""Static SVG rendering of a region decomposition in the (mu, t) plane.

Orientation: mu runs horizontally, t vertically upward, so the strips fan
out from the bottom.  Pure string assembly with integer coordinates.
"""

from __future__ import annotations

from .regions import RegionDecomposition
from .textfmt import line_str

_PALETTE = (
    "#e2edf7", "#fdeedc", "#e6f4e2", "#f7e2ee", "#eee6fa",
    "#f4f0d9", "#dcf2f0", "#fbe3e0",
)

_SCALE = 12


def regions_svg(dec: RegionDecomposition, tmax: int | None = None) -> str:
    if tmax is None:
        tmax = dec.t0 + 10
    tmax = max(tmax, dec.t0 + 1)
    if dec.degenerate:
        d = dec.degrees[0]
        lines = [(d, b) for b in sorted(dec.ray_pieces)]
    else:
        lines = [(line.slope, line.intercept) for line in dec.lines]
    if not lines:
        lines = [(0, 0)]
    mu_lo = min(a * dec.t0 + b for a, b in lines) - 2
    mu_hi = max(a * tmax + b for a, b in lines) + 2
    width = (mu_hi - mu_lo) * _SCALE
    height = (tmax - dec.t0 + 2) * _SCALE

    def x(mu):
        return (mu - mu_lo) * _SCALE

    def y(t):
        return height - (t - dec.t0 + 1) * _SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if not dec.degenerate:
        for i, region in enumerate(dec.regions):
            a0, b0 = lines[region.lower]
            a1, b1 = lines[region.upper]
            pts = [
                (x(a0 * dec.t0 + b0), y(dec.t0)),
                (x(a1 * dec.t0 + b1), y(dec.t0)),
                (x(a1 * tmax + b1), y(tmax)),
                (x(a0 * tmax + b0), y(tmax)),
            ]
            coords = " ".join(f"{px},{py}" for px, py in pts)
            fill = _PALETTE[i % len(_PALETTE)]
            parts.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"/>')
    for a, b in lines:
        x0, y0 = x(a * dec.t0 + b), y(dec.t0)
        x1, y1 = x(a * tmax + b), y(tmax)
        parts.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#444444" stroke-width="1"/>'
        )
        label = line_str(a, b)
        parts.append(
            f'<text x="{x1 + 2}" y="{y1 - 2}" font-size="9" fill="#333333">{label}</text>'
        )
    parts.append(
        f'<text x="2" y="{height - 2}" font-size="10" fill="#000000">'
        f"mu right, t up; t = {dec.t0}..{tmax}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
