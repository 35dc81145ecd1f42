"""Exact hyperconic fitting by wedge-and-dual, a linear-algebra oracle, and
reduction of plane conics to standard form.

``fit_exact`` wedges the D-1 embedded points into a (D-1)-blade of the
Euclidean algebra on R^D and takes its Clifford dual, which is the unique
(up to scale) vector orthogonal to every embedded point, i.e. the conic.
``fit_oracle`` solves the same incidence system by Gaussian elimination and
shares no code with the algebra path beyond the embedding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .conic_space import conic_dim, embed_points, tau_inv
from .errors import AmbiguousFitError, DegenerateConfigurationError, HyperconicError
from .ga import Multivector, Signature, dual, wedge_all

DEGENERACY_TOL = 1e-10
RANK_TOL = 1e-10
CLASSIFY_TOL = 1e-9


@dataclass(frozen=True)
class ConicFitResult:
    conic: np.ndarray
    matrix: np.ndarray
    residuals: np.ndarray
    blade: Multivector | None = field(default=None, repr=False)

    @property
    def max_residual(self) -> float:
        return float(np.max(np.abs(self.residuals)))


def _points(points) -> np.ndarray:
    X = np.asarray(points, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError(f"expected an (N, m) array of points, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("points must be finite")
    return X


def dual_vector(points) -> tuple[np.ndarray, Multivector]:
    """Clifford dual of the wedge of D-1 embedded points, plus the blade itself.

    Raises DegenerateConfigurationError when the wedge vanishes relative to
    the product of the input norms.
    """
    X = _points(points)
    m = X.shape[1]
    D = conic_dim(m)
    if X.shape[0] != D - 1:
        raise ValueError(f"exact fit in R^{m} needs exactly {D - 1} points, got {X.shape[0]}")
    emb = embed_points(X)
    sig = Signature(D)
    vectors = [Multivector.vector(row, sig) for row in emb]
    blade = wedge_all(vectors)
    scale = math.prod(float(np.linalg.norm(row)) for row in emb)
    if blade.norm() <= DEGENERACY_TOL * scale:
        raise DegenerateConfigurationError(
            f"embedded points are linearly dependent (|wedge| = {blade.norm():.3g}); "
            "no unique hyperconic passes through them"
        )
    u_star = dual(blade)
    return u_star.coords(), blade


def fit_exact(points) -> ConicFitResult:
    """The unique hyperconic through D-1 points in general position."""
    conic, blade = dual_vector(points)
    emb = embed_points(_points(points))
    return ConicFitResult(conic, tau_inv(conic), emb @ conic, blade)


def nullspace(M, tol: float = RANK_TOL) -> np.ndarray:
    """Basis of the right nullspace of M (columns), by Gauss-Jordan with partial pivoting."""
    A = np.array(M, dtype=float)
    rows, cols = A.shape
    thresh = tol * max(1.0, float(np.max(np.abs(A)))) if A.size else tol
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r + int(np.argmax(np.abs(A[r:, c])))
        if abs(A[p, c]) <= thresh:
            A[r:, c] = 0.0
            continue
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] /= A[r, c]
        others = np.arange(rows) != r
        A[others] -= np.outer(A[others, c], A[r])
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)))
    for k, f in enumerate(free):
        basis[f, k] = 1.0
        for i, pc in enumerate(pivots):
            basis[pc, k] = -A[i, f]
    return basis


def fit_oracle(points) -> np.ndarray:
    """Unit conic vector solving [x̲_i]·a = 0.

    Exactly determined input (D-1 points) goes through Gaussian elimination;
    larger inputs return the minimal-residual direction of the stacked system.
    """
    X = _points(points)
    m = X.shape[1]
    D = conic_dim(m)
    k = X.shape[0]
    if k < D - 1:
        raise AmbiguousFitError(f"{k} points leave a family of hyperconics; need at least {D - 1}")
    emb = embed_points(X)
    if k == D - 1:
        basis = nullspace(emb)
        if basis.shape[1] != 1:
            raise AmbiguousFitError(f"incidence system has a {basis.shape[1]}-dimensional nullspace")
        v = basis[:, 0]
    else:
        _, s, vt = np.linalg.svd(emb)
        if s[-2] <= RANK_TOL * s[0]:
            raise AmbiguousFitError("incidence system is rank deficient; many hyperconics fit")
        v = vt[-1]
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class StandardForm:
    """A conic reduced to centre, principal axes and orientation.

    ``denominators`` are the signed squared semi-axes d_i in
    Σ u_i²/d_i = 1 (ellipse and hyperbola), ordered major-first for an
    ellipse and transverse-first for a hyperbola; ``rotation`` is the angle
    of the first axis in (-π/2, π/2]. For a parabola ``center`` is the
    vertex, ``semi_axes`` holds the focal length and ``rotation`` is the
    direction of the symmetry axis.
    """

    kind: str
    center: np.ndarray
    semi_axes: tuple[float, ...]
    rotation: float
    denominators: tuple[float, ...] = ()
    axes: np.ndarray | None = field(default=None, repr=False)

    def axis_ratio(self) -> float:
        """Larger over smaller squared semi-axis."""
        sq = sorted(a * a for a in self.semi_axes)
        return sq[-1] / sq[0]

    def equation(self, digits: int = 3) -> str:
        return format_equation(self, digits)


def _angle(v) -> float:
    t = math.atan2(v[1], v[0])
    if t <= -math.pi / 2:
        t += math.pi
    elif t > math.pi / 2:
        t -= math.pi
    return t


def classify_conic(A) -> StandardForm:
    """Standard form of the conic x'ᵀAx' = 0 for a 3x3 symmetric A.

    Kind comes from δ = a11·a22 - a12² (ellipse > 0, hyperbola < 0,
    parabola = 0) unless det A vanishes (degenerate). A non-degenerate
    ellipse with no real points is reported as ``imaginary``.
    Larger matrices get kind ``unclassified`` with centre and axes filled in
    when the quadratic part is invertible.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 2:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.allclose(A, A.T, rtol=0, atol=1e-12 * max(1.0, np.abs(A).max())):
        raise ValueError("matrix is not symmetric")
    n = A.shape[0]
    m = n - 1
    scale = np.linalg.norm(A)
    if scale == 0:
        raise HyperconicError("zero matrix does not define a conic")
    An = A / scale
    Q, b, c = An[:m, :m], An[:m, m], An[m, m]
    qnorm = np.linalg.norm(Q)
    if qnorm <= CLASSIFY_TOL:
        raise HyperconicError("zero quadratic part: the equation is linear, not a conic")
    lam, vecs = np.linalg.eigh(Q)

    if m != 2:
        if np.min(np.abs(lam)) <= CLASSIFY_TOL * qnorm:
            return StandardForm("unclassified", np.full(m, np.nan), (), math.nan, (), vecs)
        center = np.linalg.solve(Q, -b)
        k = c + b @ center
        d = -k / lam
        order = np.argsort(-d)
        return StandardForm(
            "unclassified", center, tuple(float(math.sqrt(abs(x))) for x in d[order]),
            math.nan, tuple(float(x) for x in d[order]), vecs[:, order],
        )

    delta = Q[0, 0] * Q[1, 1] - Q[0, 1] ** 2
    det = float(np.linalg.det(An))
    if abs(det) <= CLASSIFY_TOL:
        return StandardForm("degenerate", np.full(2, np.nan), (), math.nan, (), vecs)

    if abs(delta) <= CLASSIFY_TOL * qnorm * qnorm:
        return _parabola(Q, b, c, lam, vecs)

    center = np.linalg.solve(Q, -b)
    k = c + b @ center
    d = -k / lam
    if delta > 0:
        if np.all(d < 0):
            return StandardForm("imaginary", center, (), math.nan, tuple(float(x) for x in d), vecs)
        kind = "ellipse"
        order = np.argsort(-d, kind="stable")
    else:
        kind = "hyperbola"
        order = np.array([0, 1]) if d[0] > 0 else np.array([1, 0])
    d = d[order]
    vecs = vecs[:, order]
    rot = 0.0 if kind == "ellipse" and math.isclose(d[0], d[1], rel_tol=1e-12) else _angle(vecs[:, 0])
    return StandardForm(
        kind,
        center,
        tuple(float(math.sqrt(abs(x))) for x in d),
        rot,
        tuple(float(x) for x in d),
        vecs,
    )


def _parabola(Q, b, c, lam, vecs):
    i_null = int(np.argmin(np.abs(lam)))
    i_main = 1 - i_null
    axis = vecs[:, i_null]
    across = vecs[:, i_main]
    lm = lam[i_main]
    br = b @ across
    bs = b @ axis
    # lm r² + 2 br r + 2 bs s + c = 0 in the (across, axis) frame
    r0 = -br / lm
    s0 = -(c - br * br / lm) / (2 * bs)
    four_p = -2 * bs / lm
    vertex = r0 * across + s0 * axis
    return StandardForm(
        "parabola", vertex, (abs(four_p) / 4,), _angle(axis), (float(four_p),),
        np.column_stack([axis, across]),
    )


def _fmt(v: float, digits: int) -> str:
    s = f"{v:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _shifted(name: str, c: float, digits: int) -> str:
    cs = _fmt(c, digits)
    if cs == "0":
        return f"{name}²"
    sign = "-" if c > 0 else "+"
    return f"({name}{sign}{_fmt(abs(c), digits)})²"


def _axis_names(rotation: float):
    if abs(rotation) < 1e-9:
        return "x", "y", True
    if abs(abs(rotation) - math.pi / 2) < 1e-9:
        return "y", "x", True
    return "u", "v", False


def format_equation(sf: StandardForm, digits: int = 3) -> str:
    """Render a standard form like "(x-4.005)²/14.075 + y²/1.45 = 1"."""
    if sf.kind == "degenerate":
        return "degenerate conic (det A = 0)"
    if sf.kind == "imaginary":
        return "imaginary ellipse (no real points)"
    if sf.kind == "unclassified":
        return "unclassified hyperconic"
    first, second, aligned = _axis_names(sf.rotation)
    cx, cy = float(sf.center[0]), float(sf.center[1])
    coord = {"x": cx, "y": cy}
    if aligned:
        c1, c2 = coord[first], coord[second]
        note = ""
    else:
        c1 = c2 = 0.0
        note = (
            f"  [u along {_fmt(sf.rotation, digits)} rad, origin at "
            f"({_fmt(cx, digits)}, {_fmt(cy, digits)})]"
        )
    if sf.kind == "parabola":
        # axis of symmetry is the first name; the squared term runs across it
        lhs = _shifted(second, c2, digits)
        lin = first if _fmt(c1, digits) == "0" else f"({first}{'-' if c1 > 0 else '+'}{_fmt(abs(c1), digits)})"
        return f"{lhs} = {_fmt(sf.denominators[0], digits)}·{lin}{note}"
    d1, d2 = sf.denominators
    t1 = f"{_shifted(first, c1, digits)}/{_fmt(abs(d1), digits)}"
    t2 = f"{_shifted(second, c2, digits)}/{_fmt(abs(d2), digits)}"
    op = "+" if sf.kind == "ellipse" else "-"
    return f"{t1} {op} {t2} = 1{note}"
