"""Conformal model of R^m inside Cl(m+1, 1).

Basis layout: e_1..e_m Euclidean, e_{m+1} = e₊ (squares to +1) and
e_{m+2} = e₋ (squares to -1). The null vectors are derived from them:
e∞ = e₋ + e₊ and e₀ = ½(e₋ - e₊), so that e∞² = e₀² = 0 and e∞·e₀ = -1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HyperconicError
from .ga import Multivector, Signature

BOUNDARY_BAND = 1e-9


def signature(m: int) -> Signature:
    return Signature(m + 1, 1)


def e_plus(m: int) -> Multivector:
    return Multivector.basis(m + 1, signature(m))


def e_minus(m: int) -> Multivector:
    return Multivector.basis(m + 2, signature(m))


def e_inf(m: int) -> Multivector:
    return e_minus(m) + e_plus(m)


def e_origin(m: int) -> Multivector:
    return 0.5 * (e_minus(m) - e_plus(m))


def _euclidean(x, m: int) -> Multivector:
    return Multivector({1 << i: float(c) for i, c in enumerate(x)}, signature(m))


def lift(x) -> Multivector:
    """X = x + ½|x|² e∞ + e₀, a null vector with unit e₀ component."""
    x = np.asarray(x, dtype=float)
    m = x.size
    return _euclidean(x, m) + 0.5 * float(x @ x) * e_inf(m) + e_origin(m)


@dataclass(frozen=True)
class SphereVector:
    coords: Multivector
    center: np.ndarray
    radius: float


def sphere(center, radius: float) -> SphereVector:
    """S = lift(center) - ½ρ² e∞; S·lift(y) = ½(ρ² - |y - c|²)."""
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    center = np.asarray(center, dtype=float)
    coords = lift(center) - 0.5 * radius * radius * e_inf(center.size)
    return SphereVector(coords, center, float(radius))


def sphere_side(S, x) -> float:
    """S·X / ((S·e∞)(X·e∞)): positive inside, zero on, negative outside."""
    S = S.coords if isinstance(S, SphereVector) else S
    x = np.asarray(x, dtype=float)
    m = x.size
    if S.signature != signature(m):
        raise ValueError(f"sphere lives in {S.signature}, point needs {signature(m)}")
    X = lift(x)
    einf = e_inf(m)
    norm = (S | einf).scalar_part() * (X | einf).scalar_part()
    if abs(norm) <= BOUNDARY_BAND:
        raise HyperconicError("vanishing normalizer: S has no e₀ component (flat or degenerate)")
    return (S | X).scalar_part() / norm


def null_coords(S: Multivector, m: int) -> np.ndarray:
    """Coordinates of a vector on the basis (e_1..e_m, e∞, e₀)."""
    c = S.coords()
    ep, em = c[m], c[m + 1]
    # a e₊ + b e₋ = s∞ e∞ + s₀ e₀  with e∞ = e₋+e₊, e₀ = ½(e₋-e₊)
    s_inf = 0.5 * (ep + em)
    s_0 = em - ep
    return np.concatenate([c[:m], [s_inf, s_0]])


def from_null_coords(w) -> Multivector:
    """Inverse of :func:`null_coords`."""
    w = np.asarray(w, dtype=float)
    m = w.size - 2
    return _euclidean(w[:m], m) + w[m] * e_inf(m) + w[m + 1] * e_origin(m)


def features(X) -> np.ndarray:
    """Rows φ(x) with w·φ(x) = S·lift(x) for S = from_null_coords(w).

    φ(x) = (x_1, ..., x_m, -1, -½|x|²).
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[0]
    return np.hstack([X, -np.ones((n, 1)), -0.5 * np.sum(X * X, axis=1, keepdims=True)])
