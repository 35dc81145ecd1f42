"""Labelled point clouds around a ground-truth hyperconic."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .conic_space import homogenize, tau_inv
from .contour import zero_crossings
from .errors import HyperconicError
from .perceptron import LabeledDataset

GRID = 400
BATCH = 1024


class DatasetError(HyperconicError):
    pass


@dataclass(frozen=True)
class Preset:
    weights: tuple[float, ...]
    lo: tuple[float, ...]
    hi: tuple[float, ...]
    note: str = ""

    @property
    def matrix(self) -> np.ndarray:
        return tau_inv(np.array(self.weights))


# Weight vectors in tau coordinates. The three non-circle presets are
# published perceptron weights, used here as ground truth.
PRESETS = {
    "circle": Preset((0.0, 0.0, -1 / np.sqrt(2), 1 / np.sqrt(2), 1 / np.sqrt(2), 0.0),
                     (-2.0, -2.0), (2.0, 2.0), "unit circle"),
    "ellipse": Preset((0.0, 0.0, -3.30, 5.00, 6.36, 0.0), (-1.6, -1.6), (1.6, 1.6),
                      "origin-centred ellipse"),
    "ellipse-shifted": Preset((8.48, 0.0, -2.84, -1.50, -14.43, 0.0), (-0.5, -2.5), (8.5, 2.5),
                              "ellipse centred near (4, 0)"),
    "hyperbola": Preset((-2.23, 0.0, -8.26, -19.05, 20.2, 0.0), (-2.0, -2.0), (2.0, 2.0),
                        "hyperbola, transverse axis along y"),
}


@dataclass(frozen=True)
class DatasetSpec:
    matrix: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    per_class: int = 100
    margin: float = 0.05
    noise: float = 0.0
    seed: int = 0
    name: str = "custom"
    budget: int | None = None

    def __post_init__(self):
        if self.per_class < 1:
            raise ValueError("need at least one sample per class")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")
        if self.noise < 0:
            raise ValueError("noise must be non-negative")
        lo, hi = np.asarray(self.lo, float), np.asarray(self.hi, float)
        if lo.shape != hi.shape or np.any(hi <= lo):
            raise ValueError("bounding box needs lo < hi in every coordinate")
        if np.asarray(self.matrix).shape != (lo.size + 1, lo.size + 1):
            raise ValueError("matrix size does not match the box dimension")

    @classmethod
    def from_preset(cls, name: str, **kw) -> DatasetSpec:
        try:
            p = PRESETS[name]
        except KeyError:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
        return cls(p.matrix, np.array(p.lo), np.array(p.hi), name=name, **kw)


def _field(A, P):
    Ph = np.hstack([P, np.ones((P.shape[0], 1))])
    return np.einsum("ij,jk,ik->i", Ph, A, Ph)


def boundary_samples(A, lo, hi, pad: float = 0.0, grid: int = GRID) -> np.ndarray:
    """Points on the plane conic x'ᵀAx' = 0 inside the padded box."""
    xs = np.linspace(lo[0] - pad, hi[0] + pad, grid)
    ys = np.linspace(lo[1] - pad, hi[1] + pad, grid)
    gx, gy = np.meshgrid(xs, ys)
    F = _field(A, np.column_stack([gx.ravel(), gy.ravel()])).reshape(grid, grid)
    return zero_crossings(F, xs, ys)


def _distance_ok(P, A, margin, boundary):
    if margin == 0:
        return np.ones(len(P), dtype=bool)
    if boundary is not None:
        if boundary.size == 0:
            return np.ones(len(P), dtype=bool)
        d2 = np.min(
            np.sum((P[:, None, :] - boundary[None, :, :]) ** 2, axis=2), axis=1
        )
        return d2 >= margin * margin
    # first-order (Sampson) distance for m != 2
    Ph = np.hstack([P, np.ones((len(P), 1))])
    F = np.einsum("ij,jk,ik->i", Ph, A, Ph)
    grad = 2 * (Ph @ A)[:, :-1]
    g = np.linalg.norm(grad, axis=1)
    with np.errstate(divide="ignore"):
        return np.abs(F) >= margin * g


def generate_dataset(spec: DatasetSpec) -> LabeledDataset:
    """Rejection-sample a balanced labelled cloud.

    Points are uniform in the box; the label is the sign of x'ᵀAx'
    (+1 positive). Points closer than ``margin`` to the conic are discarded
    (Euclidean distance to a sampled boundary in the plane, first-order
    distance otherwise). Gaussian noise of std ``noise`` is added afterwards.
    """
    A = np.asarray(spec.matrix, dtype=float)
    lo, hi = np.asarray(spec.lo, float), np.asarray(spec.hi, float)
    m = lo.size
    rng = np.random.default_rng(spec.seed)
    boundary = boundary_samples(A, lo, hi, spec.margin) if m == 2 else None
    budget = spec.budget or max(200_000, 1000 * spec.per_class)

    keep = {1.0: [], -1.0: []}
    drawn = 0
    while min(len(v) for v in keep.values()) < spec.per_class:
        if drawn >= budget:
            raise DatasetError(
                f"sampling budget of {budget} points exhausted with "
                f"{len(keep[1.0])}/{len(keep[-1.0])} samples per class; "
                "enlarge the box or reduce the margin"
            )
        P = rng.uniform(lo, hi, size=(BATCH, m))
        drawn += BATCH
        F = _field(A, P)
        ok = _distance_ok(P, A, spec.margin, boundary) & (F != 0)
        for p, f in zip(P[ok], F[ok]):
            bucket = keep[1.0 if f > 0 else -1.0]
            if len(bucket) < spec.per_class:
                bucket.append(p)

    points = np.vstack([keep[1.0], keep[-1.0]])
    labels = np.concatenate([np.ones(spec.per_class), -np.ones(spec.per_class)])
    order = rng.permutation(len(labels))
    points, labels = points[order], labels[order]
    if spec.noise > 0:
        points = points + rng.normal(0.0, spec.noise, size=points.shape)
    meta = {
        "generator": spec.name,
        "per_class": spec.per_class,
        "margin": spec.margin,
        "noise": spec.noise,
        "seed": spec.seed,
    }
    return LabeledDataset(points, labels, meta)


def on_conic_samples(A, lo, hi, n: int, seed: int = 0) -> np.ndarray:
    """``n`` points lying (to grid accuracy, then refined) on a plane conic."""
    pts = boundary_samples(A, lo, hi)
    if len(pts) < n:
        raise DatasetError("conic barely meets the box")
    rng = np.random.default_rng(seed)
    pts = pts[rng.choice(len(pts), size=n, replace=False)]
    return np.array([_project(A, p) for p in pts])


def _project(A, p, iters: int = 30):
    """Newton steps along the gradient onto x'ᵀAx' = 0."""
    x = np.array(p, dtype=float)
    for _ in range(iters):
        xh = homogenize(x)
        f = xh @ A @ xh
        g = 2 * (A @ xh)[:-1]
        gg = g @ g
        if gg == 0:
            break
        x = x - f * g / gg
        if abs(f) < 1e-15:
            break
    return x
