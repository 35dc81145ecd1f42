"""Single-neuron classifiers with a hyperconic or hypersphere boundary.

The elliptical perceptron takes the D embedded coordinates of a point as its
inputs, so its zero set ω·x̲ = 0 is the hyperconic tau_inv(ω). There is no
separate bias: the constant coordinate 1/√2 plays that role. The spherical
perceptron takes the m+2 conformal features and its weights are a sphere
vector on the basis (e_1..e_m, e∞, e₀).

Training is per-sample gradient descent on (f(ω·φ) - label)², i.e. the
delta rule for a net without hidden layers.
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _backend, conformal
from .conic_space import conic_dim, embed_points, tau, tau_inv
from .errors import DivergenceError, HyperconicError
from .fit import StandardForm, classify_conic

log = logging.getLogger(__name__)

ELLIPTICAL = "elliptical"
SPHERICAL = "spherical"
FLAVORS = (ELLIPTICAL, SPHERICAL)


@dataclass(frozen=True)
class TransferFunction:
    """Odd, bounded activation with range [-1, 1].

    ``bipolar-sigmoid``: 2/(1 + exp(-βz)) - 1 = tanh(βz/2).
    ``bipolar-sine``: sin(βz) on |βz| <= π/2, saturating at ±1 beyond.
    """

    kind: str = "bipolar-sigmoid"
    beta: float = 1.0

    KINDS = ("bipolar-sigmoid", "bipolar-sine")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown transfer {self.kind!r}; choose from {self.KINDS}")
        if not self.beta > 0:
            raise ValueError(f"steepness must be positive, got {self.beta}")

    @property
    def code(self) -> int:
        return _backend.SIGMOID if self.kind == "bipolar-sigmoid" else _backend.SINE

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        if self.kind == "bipolar-sigmoid":
            return np.tanh(0.5 * self.beta * z)
        return np.sin(np.clip(self.beta * z, -math.pi / 2, math.pi / 2))

    def derivative(self, z):
        z = np.asarray(z, dtype=float)
        if self.kind == "bipolar-sigmoid":
            f = np.tanh(0.5 * self.beta * z)
            return 0.5 * self.beta * (1.0 - f * f)
        t = self.beta * z
        return np.where(np.abs(t) <= math.pi / 2, self.beta * np.cos(t), 0.0)


@dataclass
class PerceptronModel:
    weights: np.ndarray
    m: int
    transfer: TransferFunction = field(default_factory=TransferFunction)
    flavor: str = ELLIPTICAL

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        self.weights = np.asarray(self.weights, dtype=float)
        if self.weights.shape != (input_size(self.flavor, self.m),):
            raise ValueError(
                f"{self.flavor} perceptron on R^{self.m} needs {input_size(self.flavor, self.m)} "
                f"weights, got {self.weights.shape}"
            )

    def features(self, X) -> np.ndarray:
        return features(self.flavor, X)


def input_size(flavor: str, m: int) -> int:
    return conic_dim(m) if flavor == ELLIPTICAL else m + 2


def features(flavor: str, X) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if flavor == ELLIPTICAL:
        return embed_points(X)
    return conformal.features(X)


@dataclass
class LabeledDataset:
    points: np.ndarray
    labels: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points = np.atleast_2d(np.asarray(self.points, dtype=float))
        self.labels = np.asarray(self.labels, dtype=float).ravel()
        if self.points.shape[0] != self.labels.shape[0]:
            raise ValueError("points and labels differ in length")
        if self.labels.size and not np.all(np.isin(self.labels, (-1.0, 1.0))):
            raise ValueError("labels must be -1 or +1")
        if not np.all(np.isfinite(self.points)):
            raise ValueError("points must be finite")

    def __len__(self):
        return self.labels.size

    @property
    def m(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class TrainConfig:
    eta: float = 0.05
    max_epochs: int = 5000
    target_accuracy: float = 1.0
    seed: int = 0
    transfer: TransferFunction = field(default_factory=TransferFunction)
    standardize: bool = True

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError("learning rate must be positive")
        if self.max_epochs < 1:
            raise ValueError("max_epochs must be >= 1")
        if not 0 < self.target_accuracy <= 1:
            raise ValueError("target_accuracy must lie in (0, 1]")


@dataclass
class TrainReport:
    epochs: int
    accuracy: float
    converged: bool
    loss_history: list = field(default_factory=list)
    accuracy_history: list = field(default_factory=list)
    seconds: float = 0.0
    backend: str = _backend.BACKEND


def forward(model: PerceptronModel, x) -> float | np.ndarray:
    """Output f(ω·φ(x)) in [-1, 1]; vectorised over rows when ``x`` is 2-D."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != model.m:
        raise ValueError(f"model expects points in R^{model.m}, got dimension {x.shape[-1]}")
    out = model.transfer(model.features(x) @ model.weights)
    return float(out[0]) if x.ndim == 1 else out


def predict(model: PerceptronModel, X) -> np.ndarray:
    z = model.features(X) @ model.weights
    return np.where(z >= 0, 1.0, -1.0)


def accuracy(model: PerceptronModel, data: LabeledDataset) -> float:
    return float(np.mean(predict(model, data.points) == data.labels))


def sample_loss(weights, phi, label, transfer: TransferFunction) -> float:
    return float((transfer(np.dot(weights, phi)) - label) ** 2)


def sample_gradient(weights, phi, label, transfer: TransferFunction) -> np.ndarray:
    """∂/∂ω of (f(ω·φ) - label)²."""
    phi = np.asarray(phi, dtype=float)
    z = float(np.dot(weights, phi))
    return 2.0 * (float(transfer(z)) - label) * float(transfer.derivative(z)) * phi


def _normalizer(X):
    """Isotropic affine map z = (x - shift)/scale putting the cloud near the unit box."""
    shift = X.mean(axis=0)
    scale = float(np.max(np.abs(X - shift)))
    return shift, (scale if scale > 0 else 1.0)


def _homography(shift, scale):
    """H with (x, 1) = H (z, 1) for x = scale·z + shift."""
    m = shift.size
    H = np.eye(m + 1)
    H[:m, :m] *= scale
    H[:m, m] = shift
    return H


def _to_input_frame(flavor, w, shift, scale):
    """Re-express weights learnt on normalised inputs in the original coordinates.

    The decision value at every point is preserved exactly (up to rounding).
    """
    if flavor == ELLIPTICAL:
        Hinv = np.linalg.inv(_homography(shift, scale))
        B = tau_inv(w)
        A = Hinv.T @ B @ Hinv
        return tau(0.5 * (A + A.T))
    m = shift.size
    s = w[:m]
    s_inf, s_0 = w[m], w[m + 1]
    # S·X with z = (x - c)/k:  s·z - s∞ - ½ s₀|z|²
    k2 = scale * scale
    return np.concatenate([
        s / scale + s_0 * shift / k2,
        [s_inf + (s @ shift) / scale + 0.5 * s_0 * (shift @ shift) / k2],
        [s_0 / k2],
    ])


def train(data: LabeledDataset, cfg: TrainConfig = TrainConfig(), flavor: str = ELLIPTICAL):
    """Fit a perceptron by seeded per-sample gradient descent.

    Stops at the first epoch whose training accuracy reaches
    ``cfg.target_accuracy``, else after ``cfg.max_epochs``. With
    ``cfg.standardize`` the inputs are centred and scaled before lifting and
    the learnt boundary is mapped back, so the returned weights act on raw
    coordinates. Returns ``(model, report)``.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if len(data) == 0:
        raise ValueError("cannot train on an empty dataset")
    if set(np.unique(data.labels)) != {-1.0, 1.0}:
        raise ValueError("training data must contain both classes")

    X = data.points
    m = X.shape[1]
    if cfg.standardize:
        shift, scale = _normalizer(X)
    else:
        shift, scale = np.zeros(m), 1.0
    phi = np.ascontiguousarray(features(flavor, (X - shift) / scale))
    y = np.ascontiguousarray(data.labels, dtype=np.float64)

    rng = np.random.default_rng(cfg.seed)
    w = rng.uniform(-0.5, 0.5, size=phi.shape[1])
    tf = cfg.transfer
    report = TrainReport(epochs=0, accuracy=0.0, converged=False, backend=_backend.BACKEND)
    start = time.perf_counter()
    for epoch in range(1, cfg.max_epochs + 1):
        order = rng.permutation(len(y)).astype(np.longlong)
        loss = _backend.kernels.sgd_epoch(w, phi, y, order, cfg.eta, tf.code, tf.beta)
        if not (math.isfinite(loss) and np.all(np.isfinite(w))):
            raise DivergenceError(epoch)
        acc = float(np.mean(np.where(phi @ w >= 0, 1.0, -1.0) == y))
        report.loss_history.append(loss / len(y))
        report.accuracy_history.append(acc)
        report.epochs = epoch
        report.accuracy = acc
        if acc >= cfg.target_accuracy:
            report.converged = True
            break
    report.seconds = time.perf_counter() - start
    log.debug("trained %s perceptron: %d epochs, accuracy %.4f", flavor, report.epochs, report.accuracy)

    weights = _to_input_frame(flavor, w, shift, scale) if cfg.standardize else w.copy()
    return PerceptronModel(weights, m, tf, flavor), report


def extract_conic(model: PerceptronModel) -> tuple[np.ndarray, StandardForm]:
    """The decision hyperconic tau_inv(ω) and its standard form."""
    if model.flavor != ELLIPTICAL:
        raise HyperconicError("conic extraction needs an elliptical perceptron")
    A = tau_inv(model.weights)
    return A, classify_conic(A)


def decision_matrix(model: PerceptronModel) -> np.ndarray:
    """Symmetric A whose form x'ᵀAx' has the sign of the pre-activation at x.

    Elliptical: tau_inv(ω) (the form is twice the pre-activation).
    Spherical: the form -½w₀|x|² + w_e·x - w∞ equals the pre-activation.
    """
    w = model.weights
    if model.flavor == ELLIPTICAL:
        return tau_inv(w)
    m = model.m
    A = np.zeros((m + 1, m + 1))
    A[:m, :m] = -0.5 * w[m + 1] * np.eye(m)
    A[:m, m] = A[m, :m] = 0.5 * w[:m]
    A[m, m] = -w[m]
    return A


def sphere_vector(model: PerceptronModel):
    if model.flavor != SPHERICAL:
        raise HyperconicError("sphere weights need a spherical perceptron")
    return conformal.from_null_coords(model.weights)


def spherical_decision(model: PerceptronModel, x) -> float:
    """Normalised inside/outside value of the sphere encoded by the weights."""
    return conformal.sphere_side(sphere_vector(model), x)
