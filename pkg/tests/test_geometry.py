import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiscalar import geometry as geo
from multiscalar.errors import DomainError
from multiscalar.verification import FLAT_BOX, TENSOR_BOX, sample_points

from oracles import (
    christoffel_from_metric,
    connection_derivative,
    cyclic_covariant_derivative,
    lie_derivative_by_flow,
)

us = st.floats(0.1, 10.0)
ws = st.floats(-5.0, 5.0)
zs = st.floats(-3.0, 3.0)


def metric(x):
    return geo.metric_at(x)


def control_metric(x):
    # not flat: the (w, z) slice is a plane, not a unit hyperboloid
    return np.diag([-1.0, x[0] ** 2, x[0] ** 2])


def test_metric_example():
    np.testing.assert_array_equal(geo.metric_at((2.0, 0.0, 0.0)), np.diag([-1.0, 4.0, 4.0]))


def test_inverse_metric():
    p = (1.7, 0.3, -0.4)
    np.testing.assert_allclose(geo.metric_at(p) @ geo.inverse_metric_at(p), np.eye(3), atol=1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_domain(bad):
    with pytest.raises(DomainError):
        geo.metric_at((bad, 0.0, 0.0))
    with pytest.raises(DomainError):
        geo.riemann_at((bad, 0.0, 0.0))


def test_christoffel_against_metric_differences(rng):
    for p in sample_points(rng, 10, TENSOR_BOX):
        np.testing.assert_allclose(geo.christoffel_at(p), christoffel_from_metric(metric, p), atol=1e-10)
        np.testing.assert_allclose(
            geo.christoffel_derivative_at(p), connection_derivative(metric, p), atol=1e-8
        )


def test_christoffel_symmetric_lower_indices(rng):
    for p in sample_points(rng, 20):
        G = geo.christoffel_at(p)
        np.testing.assert_array_equal(G, np.swapaxes(G, 1, 2))


def test_metric_compatibility(rng):
    # d_k g_ij = G^l_ki g_lj + G^l_kj g_il
    from oracles import gradient

    for p in sample_points(rng, 10, TENSOR_BOX):
        g = geo.metric_at(p)
        G = geo.christoffel_at(p)
        dg = gradient(metric, p)
        rhs = np.einsum("lki,lj->ijk", G, g) + np.einsum("lkj,il->ijk", G, g)
        np.testing.assert_allclose(dg, rhs, atol=1e-9)


def test_curvature_routine_on_control_metric():
    # The cone -du^2 + u^2 (dw^2 + dz^2) has R^w_zwz = 1 and R^z_wwz = -1.
    for p in [(0.7, 0.2, 0.1), (2.5, -1.0, 1.0)]:
        R = geo.riemann_from_connection(
            christoffel_from_metric(control_metric, p), connection_derivative(control_metric, p)
        )
        expected = np.zeros((3, 3, 3, 3))
        expected[1, 2, 1, 2] = expected[2, 1, 2, 1] = 1.0
        expected[1, 2, 2, 1] = expected[2, 1, 1, 2] = -1.0
        np.testing.assert_allclose(R, expected, atol=1e-7)


def test_flat_examples():
    assert geo.riemann_norm_at((1.0, 0.0, 0.0)) < 1e-12
    assert geo.riemann_norm_at((5.0, -3.0, 2.0)) < 1e-10


def test_flat_from_differenced_connection(rng):
    for p in sample_points(rng, 5, TENSOR_BOX):
        R = geo.riemann_from_connection(christoffel_from_metric(metric, p), connection_derivative(metric, p))
        assert np.max(np.abs(R)) < 1e-7


@given(us, ws, zs)
def test_flatness_property(u, w, z):
    assert geo.riemann_norm_at((u, w, z)) < 1e-9


@given(us, ws, zs)
def test_riemann_antisymmetric(u, w, z):
    R = geo.riemann_at((u, w, z))
    np.testing.assert_array_equal(R, -np.swapaxes(R, 2, 3))


@pytest.mark.parametrize("vid", list(geo.VectorFieldId))
def test_lie_derivative_against_flow(vid, rng):
    for p in sample_points(rng, 5, TENSOR_BOX):
        fd = lie_derivative_by_flow(lambda x: geo.killing_vector_at(vid, x), metric, p)
        np.testing.assert_allclose(geo.lie_derivative_metric(vid, p), fd, atol=1e-9)


@pytest.mark.parametrize("vid", geo.KILLING_VECTORS)
@given(u=us, w=ws, z=zs)
def test_killing_vectors(vid, u, w, z):
    p = (u, w, z)
    scale = 1.0 + np.max(np.abs(geo.metric_at(p)))
    assert np.max(np.abs(geo.lie_derivative_metric(vid, p))) < 1e-13 * scale + 1e-12


def test_rotation_with_plus_sign_is_not_killing():
    # d_z + w d_w, the other sign choice for the second rotation
    p = np.array([1.2, 0.7, 0.3])
    wrong = lambda x: np.array([0.0, x[1], 1.0])  # noqa: E731
    assert np.max(np.abs(lie_derivative_by_flow(wrong, metric, p))) > 1.0


def test_homothety(rng):
    for p in sample_points(rng, 50):
        np.testing.assert_allclose(
            geo.lie_derivative_metric("HOM", p), 2.0 * geo.metric_at(p), atol=1e-9
        )


def test_killing_vector_examples():
    np.testing.assert_allclose(geo.killing_vector_at("T3", (1.0, 0.0, 0.0)), [-1.0, 0.0, 1.0])
    np.testing.assert_allclose(geo.killing_vector_at("R1", (3.0, 2.0, 1.0)), [0.0, 1.0, 0.0])


def test_killing_vector_jacobian_complex_step():
    from oracles import gradient

    p = np.array([1.4, -0.6, 0.8])
    for vid in geo.VectorFieldId:
        fd = gradient(lambda x: geo.killing_vector_at(vid, x), p)
        np.testing.assert_allclose(geo.killing_vector_jacobian(vid, p), fd, atol=1e-10)


# Killing tensors


def test_zero_params():
    p = (1.0, 0.5, 0.2)
    zero = geo.KillingTensorParams.from_sequence([0.0] * 20)
    np.testing.assert_array_equal(geo.killing_tensor_at(zero, p), np.zeros((3, 3)))
    assert geo.killing_residual(zero, p) == 0.0


def test_metric_slice():
    K = geo.killing_tensor_at(geo.KillingTensorParams.unit(11), (2.0, 0.0, 0.0))
    np.testing.assert_allclose(K, np.diag([-1.0, 4.0, 4.0]), atol=1e-15)


def test_metric_slice_everywhere(rng):
    for p in sample_points(rng, 50):
        K = geo.killing_tensor_at(geo.KillingTensorParams.unit(11), p)
        np.testing.assert_allclose(K, geo.metric_at(p), rtol=1e-12, atol=1e-12)


def test_linearity(rng):
    P = geo.KillingTensorParams.from_sequence(rng.uniform(-1, 1, 20))
    Q = geo.KillingTensorParams.from_sequence(rng.uniform(-1, 1, 20))
    for p in sample_points(rng, 50, TENSOR_BOX):
        np.testing.assert_allclose(
            geo.killing_tensor_at(P + Q, p),
            geo.killing_tensor_at(P, p) + geo.killing_tensor_at(Q, p),
            rtol=1e-13,
            atol=1e-13,
        )


def test_symmetric(rng):
    c = rng.uniform(-1, 1, 20)
    for p in sample_points(rng, 10):
        K = geo.killing_tensor_at(c, p)
        np.testing.assert_allclose(K, K.T, rtol=1e-15, atol=0)


def test_params_validation():
    with pytest.raises(ValueError):
        geo.KillingTensorParams.from_sequence([1.0] * 19)
    with pytest.raises(ValueError):
        geo.KillingTensorParams.from_sequence([np.nan] + [0.0] * 19)


def test_gradient_matches_differences(rng):
    from oracles import gradient

    c = rng.uniform(-1, 1, 20)
    for p in sample_points(rng, 5, TENSOR_BOX):
        fd = gradient(lambda x: geo.killing_tensor_at(c, x), p)
        np.testing.assert_allclose(geo.killing_tensor_gradient(c, p), fd, rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize("k", range(1, 21))
def test_each_basis_tensor_is_killing(k):
    c = geo.KillingTensorParams.unit(k)
    for p in [(0.8, 0.3, -0.5), (1.9, -0.9, 0.7)]:
        assert geo.killing_residual(c, p) < 1e-10
        assert np.max(np.abs(cyclic_covariant_derivative(lambda x: geo.killing_tensor_at(c, x), metric, p))) < 1e-8


def test_random_combinations_are_killing(rng):
    params = rng.uniform(-1, 1, (20, 20))
    for p in sample_points(rng, 20, TENSOR_BOX):
        for c in params:
            assert geo.killing_residual(c, p) < 1e-8


def test_mixed_index_reading_fails():
    # Reading the tabulated entries as K^i_j and lowering with g does not
    # even give a symmetric tensor.
    c = np.zeros(20)
    c[0] = 1.0
    for p in [(1.3, 0.4, 0.2), (0.9, -0.5, 0.6)]:
        K = geo.killing_tensor_at(c, p)
        lowered = geo.metric_at(p) @ K
        assert np.max(np.abs(lowered - lowered.T)) > 1e-3


def test_span_rank(rng):
    iu = np.triu_indices(3)
    rows = np.vstack([geo.killing_tensor_basis(p)[iu] for p in sample_points(rng, 20, TENSOR_BOX)])
    assert np.linalg.matrix_rank(rows) == 20


def test_tensor_domain():
    with pytest.raises(DomainError):
        geo.killing_residual(geo.KillingTensorParams.unit(1), (0.0, 0.0, 0.0))


def test_boxes_well_formed():
    for box in (FLAT_BOX, TENSOR_BOX):
        assert all(lo < hi for lo, hi in box)
        assert box[0][0] > 0.0
