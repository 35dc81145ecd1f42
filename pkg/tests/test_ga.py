import math

import numpy as np
import pytest

from hyperconic.errors import HyperconicError, SignatureMismatchError
from hyperconic.ga import (
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

from oracles import l1, max_coef_error, naive_product, random_sparse


def E(i, sig):
    return Multivector.basis(i, sig)


S2, S3, S31 = Signature(2), Signature(3), Signature(3, 1)


class TestSignature:
    def test_dimension_and_squares(self):
        s = Signature(3, 1)
        assert s.dim == 4
        assert [s.square(i) for i in range(1, 5)] == [1, 1, 1, -1]

    @pytest.mark.parametrize("p,q", [(-1, 0), (0, 0), (10, 7)])
    def test_invalid(self, p, q):
        with pytest.raises(ValueError):
            Signature(p, q)


class TestGeometricProduct:
    def test_basis_squares(self, backend):
        assert E(1, S3) * E(1, S3) == Multivector.scalar(1, S3)
        assert E(4, S31) * E(4, S31) == Multivector.scalar(-1, S31)

    def test_bivector_times_reverse(self, backend):
        e12 = E(1, S2) * E(2, S2)
        e21 = E(2, S2) * E(1, S2)
        assert e12 * e21 == Multivector.scalar(1, S2)

    def test_anticommuting_vectors(self, backend):
        assert E(1, S3) * E(2, S3) == -(E(2, S3) * E(1, S3))

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            geometric_product(E(1, S2), E(1, S3))

    def test_scalar_scaling(self):
        v = Multivector.vector([1, 2, 3])
        assert (2 * v).coords().tolist() == [2, 4, 6]
        assert (v / 2).coords().tolist() == [0.5, 1, 1.5]


class TestOuterProduct:
    def test_basis(self, backend):
        e12 = Multivector.basis((1, 2), S3)
        assert E(1, S3) ^ E(2, S3) == e12
        assert E(2, S3) ^ E(1, S3) == -e12

    def test_self_wedge_vanishes(self, rng, backend):
        v = Multivector.vector(rng.normal(size=5))
        assert (v ^ v).is_zero()

    def test_bilinear_expansion(self, backend):
        a = E(1, S2) + E(2, S2)
        b = E(1, S2) - E(2, S2)
        expected = naive_product("outer", a, b)
        assert expected == {(1, 2): -2.0}
        assert a ^ b == Multivector.basis((1, 2), S2, -2.0)


class TestWedgeAll:
    def test_orthonormal(self, backend):
        assert wedge_all([E(i, S3) for i in (1, 2, 3)]) == pseudoscalar(S3)

    def test_dependent(self, backend):
        assert wedge_all([E(1, S3), E(2, S3), E(1, S3) + E(2, S3)]).is_zero()

    def test_general_position_rank(self, rng, backend):
        V = rng.normal(size=(5, 6))
        assert np.linalg.matrix_rank(V) == 5
        blade = wedge_all([Multivector.vector(v) for v in V])
        assert blade.grades() == {5}
        assert blade.norm() > 1e-6

    def test_blade_norm_is_gram_volume(self, rng, backend):
        # |a1 ∧ ... ∧ ak|² = det(Gram) in a Euclidean algebra
        V = rng.normal(size=(3, 5))
        blade = wedge_all([Multivector.vector(v) for v in V])
        assert math.isclose(blade.norm() ** 2, np.linalg.det(V @ V.T), rel_tol=1e-12)

    def test_rejects_non_vectors(self):
        with pytest.raises(HyperconicError):
            wedge_all([E(1, S3), Multivector.basis((1, 2), S3)])

    def test_too_many(self):
        with pytest.raises(ValueError):
            wedge_all([E(1, S2), E(2, S2), E(1, S2)])


class TestInnerProduct:
    def test_vectors(self, backend):
        assert E(1, S3) | E(1, S3) == Multivector.scalar(1, S3)
        assert (E(1, S3) | E(2, S3)).is_zero()

    def test_contraction_onto_bivector(self, backend):
        e12 = Multivector.basis((1, 2), S3)
        assert E(1, S3) | e12 == E(2, S3)
        assert (e12 | E(1, S3)).is_zero()

    def test_is_symmetric_dot_on_vectors(self, rng, backend):
        a, b = rng.normal(size=4), rng.normal(size=4)
        va, vb = Multivector.vector(a), Multivector.vector(b)
        assert math.isclose((va | vb).scalar_part(), a @ b, rel_tol=1e-13)
        assert math.isclose((vb | va).scalar_part(), a @ b, rel_tol=1e-13)

    def test_matches_grade_projection(self, rng, backend):
        sig = Signature(4, 1)
        for _ in range(50):
            a = random_sparse(rng, sig).grade(int(rng.integers(0, 3)))
            b = random_sparse(rng, sig)
            for k in range(sig.dim + 1):
                bk = b.grade(k)
                for j in a.grades() or {0}:
                    aj = a.grade(j)
                    expected = (aj * bk).grade(k - j) if j <= k else Multivector.zero(sig)
                    assert (aj | bk).allclose(expected, rtol=1e-13)


class TestPseudoscalar:
    @pytest.mark.parametrize("sig,inv", [(S2, -1.0), (S3, -1.0), (Signature(1), 1.0), (S31, -1.0), (Signature(1, 1), 1.0)])
    def test_inverse(self, sig, inv, backend):
        I = pseudoscalar(sig)
        assert inverse_pseudoscalar(sig) == I * inv
        assert I * inverse_pseudoscalar(sig) == Multivector.scalar(1, sig)


class TestDual:
    def test_bivector_to_vector(self, backend):
        assert dual(Multivector.basis((1, 2), S3)) == E(3, S3)

    def test_scalar_to_pseudoscalar(self, backend):
        assert dual(Multivector.scalar(1, S3)) == -pseudoscalar(S3)

    def test_double_dual(self, rng, backend):
        a = random_sparse(rng, S3)
        Ii = inverse_pseudoscalar(S3)
        assert dual(dual(a)).allclose(a * (Ii * Ii))

    @pytest.mark.parametrize("sig", [S2, S3, S31, Signature(6)])
    def test_undual_inverts(self, rng, sig, backend):
        a = random_sparse(rng, sig)
        assert undual(dual(a)).allclose(a, rtol=1e-15)

    def test_contraction_identity(self, rng, backend):
        # (C ∧ B)* = C ⌋ B*  for vector C and blade B
        for d in (3, 4, 5, 6):
            sig = Signature(d)
            for k in range(1, d):
                B = wedge_all([Multivector.vector(rng.normal(size=d)) for _ in range(k)])
                C = Multivector.vector(rng.normal(size=d))
                lhs = dual(C ^ B)
                rhs = C | dual(B)
                assert lhs.allclose(rhs, rtol=1e-12)


class TestNullSpaces:
    def test_opns(self, backend):
        assert opns_contains(E(1, S3), 3 * E(1, S3))
        assert not opns_contains(E(1, S3), E(2, S3))
        assert opns_contains(Multivector.basis((1, 2), S3), E(1, S3) + E(2, S3))

    def test_ipns(self, backend):
        assert ipns_contains(E(1, S2), E(2, S2))
        assert not ipns_contains(E(1, S2), E(1, S2))

    def test_dual_blade_crosscheck(self, backend):
        e12 = Multivector.basis((1, 2), S3)
        assert dual(e12) == E(3, S3)
        assert ipns_contains(dual(e12), E(1, S3)) == opns_contains(e12, E(1, S3)) is True

    def test_zero_blade(self):
        with pytest.raises(HyperconicError):
            opns_contains(Multivector.zero(S3), E(1, S3))

    def test_linear_dependence_law(self, rng, backend):
        for d in (3, 5, 6):
            for k in range(1, d):
                X = rng.normal(size=(k, d))
                A = wedge_all([Multivector.vector(x) for x in X])
                inside = Multivector.vector(rng.normal(size=k) @ X)
                assert (inside ^ A).norm() <= 1e-10 * inside.norm() * A.norm()
                outside = Multivector.vector(rng.normal(size=d))
                assert not opns_contains(A, outside)


class TestAlgebraProperties:
    @pytest.mark.parametrize("sig", [S2, S3, Signature(6), Signature(4, 1)])
    def test_associativity(self, rng, sig, backend):
        for _ in range(100):
            a, b, c = (random_sparse(rng, sig) for _ in range(3))
            assert ((a * b) * c).allclose(a * (b * c), rtol=1e-12)

    def test_vector_wedge_anticommutes_exactly(self, rng, backend):
        for _ in range(100):
            x = Multivector.vector(rng.normal(size=5))
            y = Multivector.vector(rng.normal(size=5))
            assert ((x ^ y) + (y ^ x)).is_zero()

    @pytest.mark.parametrize("sig", [S2, S3, Signature(6), Signature(4, 1)])
    def test_against_cayley_expander(self, rng, sig, backend):
        for _ in range(200):
            a, b = random_sparse(rng, sig), random_sparse(rng, sig)
            scale = l1(a) * l1(b)
            assert max_coef_error(geometric_product(a, b), naive_product("geometric", a, b), scale) <= 1e-12
            assert max_coef_error(outer_product(a, b), naive_product("outer", a, b), scale) <= 1e-12
            assert max_coef_error(inner_product(a, b), naive_product("inner", a, b), scale) <= 1e-12


class TestRepresentation:
    def test_small_coefficients_dropped(self):
        mv = Multivector({0: 1e-15, 1: 2.0}, S2)
        assert dict(mv.terms) == {1: 2.0}

    def test_rendering_order(self):
        mv = Multivector({0b100: -2.0, 0b011: 1.5}, S3)
        assert str(mv) == "-2 e3 + 1.5 e12"
        assert str(Multivector({0b011: 1.5, 0b100: -2.0}, S3)) == "-2 e3 + 1.5 e12"
        assert str(Multivector.zero(S3)) == "0"
        assert str(Multivector({0: 2.0, 0b11: -1.0}, S2)) == "2 - 1 e12"

    def test_mask_outside_signature(self):
        with pytest.raises(ValueError):
            Multivector({0b1000: 1.0}, S3)

    def test_basis_sign_from_ordering(self):
        assert Multivector.basis((2, 1), S2) == -Multivector.basis((1, 2), S2)

    def test_reverse(self):
        e12 = Multivector.basis((1, 2), S3)
        assert e12.reverse() == -e12
        assert E(1, S3).reverse() == E(1, S3)
