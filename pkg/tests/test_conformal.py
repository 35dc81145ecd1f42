import numpy as np
import pytest

from hyperconic import conformal as cga
from hyperconic.errors import HyperconicError
from hyperconic.ga import Multivector


@pytest.mark.parametrize("m", [2, 3])
def test_null_basis(m):
    einf, e0 = cga.e_inf(m), cga.e_origin(m)
    assert (einf | einf).is_zero()
    assert (e0 | e0).is_zero()
    assert np.isclose((einf | e0).scalar_part(), -1.0)


def test_lift_is_null(rng):
    for _ in range(20):
        X = cga.lift(rng.normal(size=3))
        assert abs((X | X).scalar_part()) < 1e-12


def test_lift_inner_product_is_distance(rng):
    x, y = rng.normal(size=2), rng.normal(size=2)
    d2 = float((x - y) @ (x - y))
    assert np.isclose((cga.lift(x) | cga.lift(y)).scalar_part(), -0.5 * d2)


def test_sphere_side_signs():
    S = cga.sphere([0.0, 0.0], 1.0)
    assert cga.sphere_side(S, [0.1, 0.2]) > 0
    assert cga.sphere_side(S, [2.0, 0.0]) < 0
    assert abs(cga.sphere_side(S, [0.6, 0.8])) < 1e-15


def test_sphere_side_value(rng):
    # the normalised value is ½(ρ² - |x - c|²)
    c, r = rng.normal(size=3), 1.7
    x = rng.normal(size=3)
    S = cga.sphere(c, r)
    assert np.isclose(cga.sphere_side(S, x), 0.5 * (r * r - (x - c) @ (x - c)))


def test_sphere_side_scale_invariant():
    S = cga.sphere([1.0, -1.0], 2.0)
    scaled = cga.SphereVector(-3.0 * S.coords, S.center, S.radius)
    assert np.isclose(cga.sphere_side(scaled, [0.0, 0.0]), cga.sphere_side(S, [0.0, 0.0]))


def test_flat_raises():
    plane = Multivector.vector([1.0, 0.0, 0.0, 0.0], cga.signature(2)) + cga.e_inf(2)
    with pytest.raises(HyperconicError):
        cga.sphere_side(plane, [0.0, 0.0])


def test_bad_radius_and_dimension():
    with pytest.raises(ValueError):
        cga.sphere([0.0, 0.0], 0.0)
    with pytest.raises(ValueError):
        cga.sphere_side(cga.sphere([0.0, 0.0], 1.0), [0.0, 0.0, 0.0])


def test_null_coords_round_trip(rng):
    w = rng.normal(size=5)
    assert np.allclose(cga.null_coords(cga.from_null_coords(w), 3), w)


def test_features_reproduce_inner_product(rng):
    w = rng.normal(size=4)
    S = cga.from_null_coords(w)
    for x in rng.normal(size=(10, 2)):
        phi = cga.features(x)[0]
        assert np.isclose(w @ phi, (S | cga.lift(x)).scalar_part())
