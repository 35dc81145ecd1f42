"""Marching squares on the sign of a sampled scalar field."""
from __future__ import annotations

import numpy as np


def _lerp(a, b, fa, fb):
    t = fa / (fa - fb)
    return a + t * (b - a)


def zero_crossings(F, xs, ys) -> np.ndarray:
    """Points where F changes sign along grid edges, linearly interpolated.

    ``F[j, i]`` is the field at ``(xs[i], ys[j])``. Returns an (k, 2) array.
    """
    F = np.asarray(F, dtype=float)
    pos = F > 0
    out = []
    # horizontal edges
    j, i = np.nonzero(pos[:, :-1] != pos[:, 1:])
    if j.size:
        x = _lerp(xs[i], xs[i + 1], F[j, i], F[j, i + 1])
        out.append(np.column_stack([x, ys[j]]))
    # vertical edges
    j, i = np.nonzero(pos[:-1, :] != pos[1:, :])
    if j.size:
        y = _lerp(ys[j], ys[j + 1], F[j, i], F[j + 1, i])
        out.append(np.column_stack([xs[i], y]))
    return np.vstack(out) if out else np.empty((0, 2))


def marching_squares(F, xs, ys) -> np.ndarray:
    """Line segments approximating the zero set of F, shape (k, 2, 2).

    Segment order is deterministic (row-major over cells).
    """
    F = np.asarray(F, dtype=float)
    pos = F > 0
    ny, nx = F.shape
    code = (
        pos[:-1, :-1].astype(np.uint8)
        | (pos[:-1, 1:].astype(np.uint8) << 1)
        | (pos[1:, 1:].astype(np.uint8) << 2)
        | (pos[1:, :-1].astype(np.uint8) << 3)
    )
    segs = []
    jj, ii = np.nonzero((code != 0) & (code != 15))
    for j, i in zip(jj.tolist(), ii.tolist()):
        x0, x1, y0, y1 = xs[i], xs[i + 1], ys[j], ys[j + 1]
        f00, f10, f11, f01 = F[j, i], F[j, i + 1], F[j + 1, i + 1], F[j + 1, i]
        # edges: bottom (00-10), right (10-11), top (01-11), left (00-01)
        pts = {}
        if (f00 > 0) != (f10 > 0):
            pts["b"] = (_lerp(x0, x1, f00, f10), y0)
        if (f10 > 0) != (f11 > 0):
            pts["r"] = (x1, _lerp(y0, y1, f10, f11))
        if (f01 > 0) != (f11 > 0):
            pts["t"] = (_lerp(x0, x1, f01, f11), y1)
        if (f00 > 0) != (f01 > 0):
            pts["l"] = (x0, _lerp(y0, y1, f00, f01))
        if len(pts) == 2:
            a, b = pts.values()
            segs.append((a, b))
        elif len(pts) == 4:
            centre = 0.25 * (f00 + f10 + f11 + f01)
            # pair edges so the centre's side stays connected to matching corners
            if (centre > 0) == (f00 > 0):
                segs.append((pts["b"], pts["r"]))
                segs.append((pts["t"], pts["l"]))
            else:
                segs.append((pts["b"], pts["l"]))
                segs.append((pts["r"], pts["t"]))
    return np.array(segs, dtype=float).reshape(-1, 2, 2)
