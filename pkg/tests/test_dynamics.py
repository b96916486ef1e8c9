import dataclasses

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiscalar.dynamics import (
    U_MIN,
    FieldState,
    IntegrationStatus,
    PotentialKind,
    PotentialSpec,
    eom_rhs,
    hamiltonian_eval,
    integrate,
    lagrangian_eval,
    lagrangian_scalefactor_eval,
    momenta,
    potential_eval,
    potential_gradient,
    scalefactor_potential,
)
from multiscalar.errors import DomainError
from multiscalar.solutions import ExactSolutionParams, potential1_solution
from multiscalar.transforms import to_field
from multiscalar.verification import random_initial_state

from oracles import euler_lagrange_accelerations, gradient

P1 = PotentialSpec(PotentialKind.I, 1.0)
P2 = PotentialSpec(PotentialKind.II, 1.0)

states = st.builds(
    lambda u, w, z, du, dw, dz: FieldState(0.0, u, w, z, du, dw, dz),
    st.floats(0.3, 3.0),
    st.floats(-1.5, 1.5),
    st.floats(-1.5, 1.5),
    st.floats(-2.0, 2.0),
    st.floats(-2.0, 2.0),
    st.floats(-2.0, 2.0),
)
specs = st.builds(PotentialSpec, st.sampled_from(list(PotentialKind)), st.floats(0.05, 3.0))


def test_potential_examples():
    assert potential_eval(P1, 0.0, 12.3) == 0.0
    spec = PotentialSpec(PotentialKind.I, 2.0)
    assert potential_eval(spec, 1.0, 0.0) == 2.0
    assert potential_gradient(spec, 1.0, 0.0) == (4.0, 4.0)
    spec = PotentialSpec(PotentialKind.II, 3.0)
    assert potential_eval(spec, 0.4, -2.0) == 3.0
    assert tuple(map(float, potential_gradient(spec, 0.4, -2.0))) == (0.0, 0.0)


@pytest.mark.parametrize("v0", [0.0, -1.0, float("nan"), float("inf")])
def test_spec_validation(v0):
    with pytest.raises(ValueError):
        PotentialSpec(PotentialKind.I, v0)


def test_spec_accepts_int_kind():
    assert PotentialSpec(2, 1.0).kind is PotentialKind.II
    assert PotentialSpec(1, 0.5).vbar == 1.0


def test_potential_gradient_by_differences():
    spec = PotentialSpec(PotentialKind.I, 0.7)
    x = np.array([0.3, -0.4])
    fd = gradient(lambda y: potential_eval(spec, y[0], y[1]), x)
    np.testing.assert_allclose(potential_gradient(spec, *x), fd, rtol=1e-12)


def test_lagrangian_examples():
    assert lagrangian_eval(FieldState(0, 1, 0, 0, 0, 0, 0), P2) == -1.0
    assert lagrangian_eval(FieldState(0, 1, 0, 0, 0, 0, 1), P1) == 0.5


def test_hamiltonian_examples():
    assert hamiltonian_eval(FieldState(0, 1, 0, 0, 0, 0, 0), P2) == 1.0
    assert hamiltonian_eval(FieldState(0, 1.7, 0, 0.3, 0, 0, 0), P1) == 0.0


def test_hamiltonian_on_exact_solution():
    # at t = 0 these constants put the state on u = 0; any t > 0 is inside
    p = ExactSolutionParams(s0=1.0, x0=1.0, v0=0.5)
    spec = PotentialSpec(PotentialKind.I, 0.5)
    for t in (0.5, 1.3, 4.0):
        e = hamiltonian_eval(to_field(potential1_solution(p, t)), spec)
        assert abs(e) < 1e-12
    with pytest.raises(DomainError):
        to_field(potential1_solution(p, 0.0))


def test_domain_errors():
    bad = FieldState(0, 0.0, 0, 0, 0, 0, 0)
    for f in (lagrangian_eval, hamiltonian_eval, eom_rhs):
        with pytest.raises(DomainError):
            f(bad, P1)
    with pytest.raises(DomainError):
        momenta(bad)


def test_eom_examples():
    np.testing.assert_array_equal(eom_rhs(FieldState(0, 1, 0, 0, 0, 0, 0), P2), (2.0, 0.0, 0.0))
    np.testing.assert_array_equal(eom_rhs(FieldState(0, 1, 1, 0, 0, 0, 0), P1), (2.0, -2.0, -2.0))


@given(states, specs)
def test_hamiltonian_is_energy_function(s, spec):
    # E = p.v - L
    p = np.array(momenta(s))
    e = p @ s.velocity - lagrangian_eval(s, spec)
    assert abs(e - hamiltonian_eval(s, spec)) < 1e-12 * (1 + abs(e))


def test_momenta_by_differences(rng):
    for _ in range(10):
        s = FieldState(0, rng.uniform(0.3, 2), *rng.uniform(-1, 1, 5))
        fd = gradient(lambda v: lagrangian_eval(FieldState(0, *s.position, *v), P1), s.velocity)
        np.testing.assert_allclose(momenta(s), fd, rtol=1e-10, atol=1e-12)


def test_euler_lagrange_consistency(rng):
    """(f2) against accelerations extracted from the Lagrangian by differences."""
    worst = 0.0
    for k in range(200):
        spec = P1 if k % 2 else PotentialSpec(PotentialKind.II, 0.7)
        q = np.array([rng.uniform(0.3, 3.0), *rng.uniform(-1.5, 1.5, 2)])
        v = rng.uniform(-2.0, 2.0, 3)
        L = lambda qq, vv: lagrangian_eval(FieldState(0, *qq, *vv), spec)  # noqa: E731
        fd = euler_lagrange_accelerations(L, q, v)
        exact = np.array(eom_rhs(FieldState(0, *q, *v), spec))
        worst = max(worst, np.max(np.abs(fd - exact) / (1 + np.abs(exact))))
    assert worst < 1e-8


def test_scalefactor_lagrangian_equivalence(rng):
    """The change of variables a^3 = (3/8) u^2 maps one Lagrangian onto the other."""
    for _ in range(100):
        spec = PotentialSpec(rng.choice([1, 2]), rng.uniform(0.1, 2.0))
        u = rng.uniform(0.2, 3.0)
        w, z, du, dw, dz = rng.uniform(-1.5, 1.5, 5)
        a = (0.375 * u * u) ** (1 / 3)
        da = (2.0 / 3.0) * a * du / u
        ref = lagrangian_eval(FieldState(0, u, w, z, du, dw, dz), spec)
        got = lagrangian_scalefactor_eval(a, da, w, z, dw, dz, scalefactor_potential(spec))
        assert abs(got - ref) < 1e-10 * (1 + abs(ref))


def test_scalefactor_kinetic_needs_a_cubed():
    # without the a^3 weight the scalar kinetic terms disagree
    u, dz = 2.0, 0.8
    a = (0.375 * u * u) ** (1 / 3)
    ref = lagrangian_eval(FieldState(0, u, 0.0, 0.0, 0.0, 0.0, dz), P2) + u * u * P2.v0
    without = (8.0 / 3.0) * 0.5 * dz * dz
    assert abs(without - ref) > 0.1


def test_scalefactor_examples():
    spec = PotentialSpec(PotentialKind.II, 1.7)
    assert lagrangian_scalefactor_eval(1.0, 0.0, 0.2, 0.1, 0.0, 0.0, spec) == -1.7
    assert lagrangian_scalefactor_eval(1.0, 1.0, 0.0, 0.0, 0.0, 0.0, P1) == -3.0
    with pytest.raises(DomainError):
        lagrangian_scalefactor_eval(0.0, 1.0, 0.0, 0.0, 0.0, 0.0, P1)


def test_integrate_matches_exact_solution():
    p = ExactSolutionParams(s0=0.4, s1=0.3, x0=0.9, x1=2.0, y0=0.2, y1=-0.3, v0=0.5)
    spec = PotentialSpec(PotentialKind.I, 0.5)
    traj = integrate(to_field(potential1_solution(p, 0.0)), spec, 10.0, dt_out=0.1)
    exact = np.array(to_field(potential1_solution(p, traj.t))[1:]).T
    assert traj.status is IntegrationStatus.COMPLETED
    assert np.max(np.abs(traj.y - exact)) < 1e-8


def test_integrated_acceleration_matches_rhs():
    s0 = FieldState(0, 1.3, 0.2, -0.1, 0.4, 0.1, -0.2)
    traj = integrate(s0, P1, 1.0, dt_out=1e-3)
    k = 500
    h = traj.t[1] - traj.t[0]
    fd = (traj.y[k + 1, 3:] - traj.y[k - 1, 3:]) / (2 * h)
    np.testing.assert_allclose(fd, eom_rhs(traj.state(k), P1), atol=1e-6)


def test_energy_drift(rng):
    for spec in (PotentialSpec(PotentialKind.I, 0.5), PotentialSpec(PotentialKind.II, 0.01)):
        for _ in range(3):
            s0, _ = random_initial_state(rng, spec, 20.0)
            traj = integrate(s0, spec, 20.0)
            assert traj.energy_drift < 1e-9


def test_invariant_plane():
    traj = integrate(FieldState(0, 1.0, 0.0, 0.3, 0.0, 0.0, 0.0), P1, 5.0)
    assert np.all(traj.y[:, 1] == 0.0)
    assert np.all(traj.y[:, 4] == 0.0)


def test_time_translation_invariance():
    s = FieldState(0.0, 1.2, 0.3, -0.2, 0.5, -0.1, 0.2)
    a = integrate(s, P1, 3.0, dt_out=0.01)
    b = integrate(s._replace(t=7.5), P1, 10.5, dt_out=0.01)
    np.testing.assert_allclose(b.t - 7.5, a.t, atol=1e-12)
    np.testing.assert_allclose(b.y, a.y, atol=1e-11)


def test_output_grid_contract():
    s = FieldState(0.0, 1.2, 0.3, -0.2, 0.5, -0.1, 0.2)
    traj = integrate(s, P1, 2.05, dt_out=0.1)
    assert len(traj) == int(np.floor(2.05 / 0.1)) + 1
    assert np.all(np.diff(traj.t) > 0)


def test_singularity_stops_cleanly():
    # collapsing state with no potential support: u reaches zero at t = 1
    s = FieldState(0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0)
    traj = integrate(s, PotentialSpec(PotentialKind.I, 0.5), 3.0, dt_out=0.01)
    assert traj.status is IntegrationStatus.SINGULARITY
    assert traj.t_stop == pytest.approx(1.0 - U_MIN, abs=1e-6)
    assert np.all(traj.y[:, 0] > 0)
    assert np.all(np.isfinite(traj.y))


def test_trajectory_is_read_only():
    traj = integrate(FieldState(0, 1.0, 0.1, 0.0, 0.2, 0.0, 0.0), P1, 1.0)
    with pytest.raises(ValueError):
        traj.y[0, 0] = 2.0
    with pytest.raises(dataclasses.FrozenInstanceError):
        traj.status = IntegrationStatus.STEP_FAILURE


def test_integrate_argument_checks():
    s = FieldState(0, 1.0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        integrate(s, P1, 1.0, tol=0.0)
    with pytest.raises(ValueError):
        integrate(s, P1, 0.0)
    with pytest.raises(DomainError):
        integrate(s._replace(u=-1.0), P1, 1.0)
