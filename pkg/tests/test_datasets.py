import numpy as np
import pytest

from hyperconic.conic_space import quadratic_form
from hyperconic.contour import marching_squares, zero_crossings
from hyperconic.datasets import PRESETS, boundary_samples, DatasetError, DatasetSpec, generate_dataset, on_conic_samples
from hyperconic.fit import classify_conic


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_classify(name):
    sf = classify_conic(PRESETS[name].matrix)
    assert sf.kind in ("ellipse", "hyperbola")


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_generated_labels_and_margin(name):
    spec = DatasetSpec.from_preset(name, per_class=40, margin=0.1, seed=2)
    data = generate_dataset(spec)
    assert len(data) == 80
    assert np.sum(data.labels > 0) == 40
    A = PRESETS[name].matrix
    q = np.array([quadratic_form(x, A) for x in data.points])
    assert np.all(np.sign(q) == data.labels)
    assert np.all(data.points >= spec.lo) and np.all(data.points <= spec.hi)
    # margin: nothing closer than 0.1 to a dense sample of the curve
    curve = boundary_samples(A, spec.lo, spec.hi, pad=1.0, grid=1500)
    d = np.min(np.linalg.norm(data.points[:, None, :] - curve[None, :, :], axis=2), axis=1)
    assert d.min() >= 0.1 - 2e-3


def test_seeded():
    spec = DatasetSpec.from_preset("circle", per_class=20, seed=9)
    a, b = generate_dataset(spec), generate_dataset(spec)
    assert np.array_equal(a.points, b.points)


def test_impossible_margin():
    spec = DatasetSpec.from_preset("circle", per_class=20, margin=5.0, budget=5000)
    with pytest.raises(DatasetError):
        generate_dataset(spec)


def test_unknown_preset():
    with pytest.raises((KeyError, ValueError)):
        DatasetSpec.from_preset("nope")


def test_on_conic_samples_lie_on_curve():
    A = PRESETS["ellipse-shifted"].matrix
    P = on_conic_samples(A, np.array([-1.0, -3.0]), np.array([9.0, 3.0]), 50, seed=1)
    assert np.max(np.abs([quadratic_form(p, A) for p in P])) < 1e-9


def test_zero_crossings_of_circle():
    xs = ys = np.linspace(-2, 2, 81)
    F = xs[None, :] ** 2 + ys[:, None] ** 2 - 1
    P = zero_crossings(F, xs, ys)
    assert len(P) > 50
    assert np.allclose(np.linalg.norm(P, axis=1), 1.0, atol=5e-3)
    segs = marching_squares(F, xs, ys)
    assert segs.shape[1:] == (2, 2)
    assert np.allclose(np.linalg.norm(segs, axis=2), 1.0, atol=5e-3)
