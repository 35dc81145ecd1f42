"""Clifford algebra of hyperconics and the elliptical perceptron.

Points of R^m are lifted to R^D, D = (m+1)(m+2)/2, where a hyperconic is a
single vector and incidence is a dot product. Five points in the plane
determine a conic as the Clifford dual of the wedge of their lifts; a single
neuron on the lifted coordinates learns a conic decision boundary.
"""
from ._backend import BACKEND
from .conic_space import (
    chart_T,
    chart_p,
    chart_q,
    conic_dim,
    embed_point,
    embed_points,
    incidence,
    index_set,
    iota,
    tau,
    tau_inv,
    veronese,
)
from .conformal import lift, sphere, sphere_side
from .errors import (
    AmbiguousFitError,
    DegenerateConfigurationError,
    DivergenceError,
    HyperconicError,
    SignatureMismatchError,
)
from .fit import ConicFitResult, StandardForm, classify_conic, fit_exact, fit_oracle
from .ga import (
    Multivector,
    Signature,
    dual,
    geometric_product,
    inner_product,
    inverse_pseudoscalar,
    ipns_contains,
    opns_contains,
    outer_product,
    pseudoscalar,
    undual,
    wedge_all,
)
from .perceptron import (
    LabeledDataset,
    PerceptronModel,
    TrainConfig,
    TransferFunction,
    extract_conic,
    forward,
    spherical_decision,
    train,
)

__version__ = "0.1.0"
