"""Static SVG: two point classes and a decision conic."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contour import marching_squares


@dataclass(frozen=True)
class PlotSpec:
    width: int = 480
    height: int = 480
    draw_classes: bool = True
    draw_conic: bool = True
    samples: int = 400

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.samples < 2:
            raise ValueError("plot dimensions must be positive")


def _f(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _bounds(points, pad=0.1):
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    return lo - pad * span, hi + pad * span


def render(points, labels=None, matrix=None, spec: PlotSpec = PlotSpec(), lo=None, hi=None) -> str:
    """SVG text for a plane scatter plot with an optional conic x'ᵀAx' = 0.

    Class +1 is drawn as crosses, class -1 as diamonds. Output is a pure
    function of the inputs.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.shape[1] != 2:
        raise ValueError("SVG plots are for points in the plane")
    if lo is None or hi is None:
        lo, hi = _bounds(points)
    lo, hi = np.asarray(lo, float), np.asarray(hi, float)
    W, H = spec.width, spec.height

    def px(p):
        x = (p[..., 0] - lo[0]) / (hi[0] - lo[0]) * W
        y = H - (p[..., 1] - lo[1]) / (hi[1] - lo[1]) * H
        return x, y

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white" stroke="black"/>',
    ]
    if spec.draw_conic and matrix is not None:
        A = np.asarray(matrix, dtype=float)
        xs = np.linspace(lo[0], hi[0], spec.samples)
        ys = np.linspace(lo[1], hi[1], spec.samples)
        gx, gy = np.meshgrid(xs, ys)
        F = A[0, 0] * gx * gx + A[1, 1] * gy * gy + 2 * A[0, 1] * gx * gy \
            + 2 * A[0, 2] * gx + 2 * A[1, 2] * gy + A[2, 2]
        segs = marching_squares(F, xs, ys)
        if len(segs):
            sx, sy = px(segs)
            d = " ".join(
                f"M{_f(a)} {_f(b)}L{_f(c)} {_f(e)}"
                for a, b, c, e in zip(sx[:, 0], sy[:, 0], sx[:, 1], sy[:, 1])
            )
            out.append(f'<path class="conic" d="{d}" fill="none" stroke="#c0392b" stroke-width="1.5"/>')
    if spec.draw_classes:
        x, y = px(points)
        labs = np.ones(len(points)) if labels is None else np.asarray(labels)
        r = 3.5
        cross, diamond = [], []
        for xi, yi, li in zip(x, y, labs):
            if li > 0:
                cross.append(f"M{_f(xi - r)} {_f(yi - r)}L{_f(xi + r)} {_f(yi + r)}"
                             f"M{_f(xi - r)} {_f(yi + r)}L{_f(xi + r)} {_f(yi - r)}")
            else:
                diamond.append(f"M{_f(xi)} {_f(yi - r)}L{_f(xi + r)} {_f(yi)}"
                               f"L{_f(xi)} {_f(yi + r)}L{_f(xi - r)} {_f(yi)}Z")
        if cross:
            out.append(f'<path class="class-pos" d="{"".join(cross)}" stroke="#1f4e9c" fill="none"/>')
        if diamond:
            out.append(f'<path class="class-neg" d="{"".join(diamond)}" stroke="#2e7d32" fill="none"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
