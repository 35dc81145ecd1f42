"""Coordinates for the space of hyperconics in R^m.

A hyperconic is a symmetric (m+1)x(m+1) matrix ``A`` with zero set
``x'ᵀ A x' = 0`` where ``x' = (x, 1)``. ``tau`` flattens ``A`` into R^D,
D = (m+1)(m+2)/2, with the diagonal divided by √2 so that the Euclidean
dot product of two flattened matrices reproduces half the quadratic form.

Coordinate order for side n (1-based entries a_ij):

    a_1n, ..., a_{n-1,n},  a_nn/√2,
    then for k = 1..n-1:  a_kk/√2, a_{k-1,k}, ..., a_{1,k}
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

SQRT2 = math.sqrt(2.0)
INV_SQRT2 = 1.0 / SQRT2


def conic_dim(m: int) -> int:
    """D = (m+1)(m+2)/2, the length of a flattened hyperconic in R^m."""
    return (m + 1) * (m + 2) // 2


def side_from_length(length: int) -> int:
    """Matrix side n with n(n+1)/2 == length; ValueError if not triangular."""
    n = int((math.isqrt(8 * length + 1) - 1) // 2)
    if n < 2 or n * (n + 1) // 2 != length:
        raise ValueError(f"length {length} is not a triangular number n(n+1)/2 with n >= 2")
    return n


@lru_cache(maxsize=None)
def tau_layout(n: int) -> tuple[tuple[int, int], ...]:
    """The (row, col) entry (0-based, row <= col) read by each flattened coordinate."""
    if n < 2:
        raise ValueError(f"matrix side must be >= 2, got {n}")
    last = n - 1
    order = [(i, last) for i in range(last)]
    order.append((last, last))
    for k in range(last):
        order.append((k, k))
        order.extend((i, k) for i in range(k - 1, -1, -1))
    return tuple(order)


@lru_cache(maxsize=None)
def _layout_arrays(n):
    layout = tau_layout(n)
    rows = np.array([r for r, _ in layout])
    cols = np.array([c for _, c in layout])
    scale = np.where(rows == cols, INV_SQRT2, 1.0)
    return rows, cols, scale


def _as_symmetric(A) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] < 2:
        raise ValueError("matrix side must be >= 2")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    return A


def tau(A) -> np.ndarray:
    """Flatten a symmetric matrix into its conic vector."""
    A = _as_symmetric(A)
    rows, cols, scale = _layout_arrays(A.shape[0])
    return A[rows, cols] * scale


def tau_inv(v) -> np.ndarray:
    """The symmetric matrix whose flattening is ``v``; diagonals are √2·coordinate."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1:
        raise ValueError("conic vector must be one-dimensional")
    n = side_from_length(v.size)
    rows, cols, _ = _layout_arrays(n)
    diag = rows == cols
    A = np.zeros((n, n))
    A[rows, cols] = np.where(diag, v * SQRT2, v)
    A[cols, rows] = A[rows, cols]
    return A


def homogenize(x) -> np.ndarray:
    """x' = (x, 1)."""
    x = np.asarray(x, dtype=float)
    return np.append(x, 1.0)


def iota(x) -> np.ndarray:
    """Rank-one lift x ↦ x'ᵀx' into the symmetric matrices."""
    xp = homogenize(x)
    return np.outer(xp, xp)


def embed_point(x) -> np.ndarray:
    """The embedded point tau(iota(x)); for m = 2 this is (x1, x2, 1/√2, x1²/√2, x2²/√2, x1x2)."""
    return tau(iota(x))


def embed_points(X) -> np.ndarray:
    """Row-wise :func:`embed_point` for an (N, m) array."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[1] + 1
    rows, cols, scale = _layout_arrays(n)
    Xp = np.hstack([X, np.ones((X.shape[0], 1))])
    return Xp[:, rows] * Xp[:, cols] * scale


def incidence(x, A) -> float:
    """Signed incidence x̲ · tau(A), equal to ½ x'ᵀ A x'.

    Zero on the hyperconic; positive where x'ᵀAx' > 0.
    """
    A = _as_symmetric(A)
    x = np.asarray(x, dtype=float)
    if A.shape[0] != x.size + 1:
        raise ValueError(f"point of dimension {x.size} needs a {x.size + 1}x{x.size + 1} matrix, got {A.shape}")
    return float(np.dot(embed_point(x), tau(A)))


def quadratic_form(x, A) -> float:
    """x'ᵀ A x' evaluated directly."""
    xp = homogenize(x)
    return float(xp @ np.asarray(A, dtype=float) @ xp)


def index_set(m: int) -> tuple[int, ...]:
    """The 1-based positions {s(0), ..., s(m)} of the √2-scaled coordinates."""
    if m < 1:
        raise ValueError("m must be >= 1")
    s = [m + 1, m + 2]
    for l in range(2, m + 1):
        s.append(s[-1] + l - 1)
    return tuple(s[: m + 1])


def veronese(xh, m: int | None = None) -> np.ndarray:
    """Degree-2 monomials of a homogeneous point in the affine chart.

    ``xh = (x1, ..., xm, 1)``; the output is ordered
    (x1, ..., xm, 1, x1², x2², x1x2, x3², x2x3, x1x3, ...), matching tau.
    """
    xh = np.asarray(xh, dtype=float)
    if m is None:
        m = xh.size - 1
    if xh.size != m + 1:
        raise ValueError(f"expected {m + 1} homogeneous coordinates, got {xh.size}")
    if xh[-1] != 1.0:
        raise ValueError("point is not in the affine chart (last coordinate must be 1)")
    rows, cols, _ = _layout_arrays(m + 1)
    return xh[rows] * xh[cols]


def chart_T(v, S) -> np.ndarray:
    """Multiply the coordinates at the 1-based positions in ``S`` by √2."""
    out = np.array(v, dtype=float)
    idx = np.asarray(sorted(S), dtype=int) - 1
    out[idx] *= SQRT2
    return out


def chart_p(v, m: int) -> np.ndarray:
    """Projective class of a nonzero vector, represented in the chart where coordinate m+1 is 1."""
    v = np.asarray(v, dtype=float)
    if not np.any(v):
        raise ValueError("the zero vector has no projective class")
    if v[m] == 0.0:
        raise ValueError(f"coordinate {m + 1} vanishes; point is outside the affine chart")
    return v / v[m]


def chart_q(z) -> np.ndarray:
    """(z1 : ... : zm : 1) ↦ (z1, ..., zm)."""
    z = np.asarray(z, dtype=float)
    if z[-1] != 1.0:
        raise ValueError("point is not in the affine chart (last coordinate must be 1)")
    return z[:-1].copy()


def same_projective_point(a, b, tol: float = 1e-12) -> bool:
    """True when ``a`` and ``b`` are proportional, compared after scaling both to unit max-norm."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        return False
    ia = int(np.argmax(np.abs(a)))
    if a[ia] == 0.0 or b[ia] == 0.0:
        return False
    return bool(np.all(np.abs(a / a[ia] - b / b[ia]) <= tol))
