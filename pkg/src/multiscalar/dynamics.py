"""Point-like Lagrangian, Hamiltonian and field equations of the model.

In the (u, w, z) chart the Lagrangian reads

    L = -u_dot^2/2 + u^2 (z_dot^2 + e^{2z} w_dot^2)/2 - u^2 V(w, z)

with the two admissible potentials V = V0 w^2 e^{2z} (``PotentialKind.I``)
and V = V0 (``PotentialKind.II``).  The energy function E keeps the same
kinetic part with the sign of the potential flipped; it is indefinite
because the u degree of freedom is a ghost.

Functions accept scalars or equally shaped numpy arrays.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DomainError

__all__ = [
    "PotentialKind",
    "PotentialSpec",
    "FieldState",
    "IntegrationStatus",
    "Trajectory",
    "potential_eval",
    "potential_gradient",
    "lagrangian_eval",
    "momenta",
    "lagrangian_scalefactor_eval",
    "scalefactor_potential",
    "hamiltonian_eval",
    "eom_rhs",
    "integrate",
    "U_MIN",
]

#: integration stops once u drops to this value
U_MIN = 1e-8


class PotentialKind(enum.Enum):
    I = 1  # noqa: E741  V0 w^2 e^{2z}
    II = 2  # V0


@dataclass(frozen=True)
class PotentialSpec:
    kind: PotentialKind
    v0: float

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        if not (math.isfinite(self.v0) and self.v0 > 0.0):
            raise ValueError(f"V0 must be positive and finite, got {self.v0!r}")

    @property
    def vbar(self) -> float:
        """Frequency sqrt(2 V0) of the normal-coordinate solutions."""
        return math.sqrt(2.0 * self.v0)


class FieldState(NamedTuple):
    t: float
    u: float
    w: float
    z: float
    du: float
    dw: float
    dz: float

    @property
    def position(self) -> np.ndarray:
        return np.array([self.u, self.w, self.z])

    @property
    def velocity(self) -> np.ndarray:
        return np.array([self.du, self.dw, self.dz])

    @classmethod
    def from_vector(cls, t: float, y) -> "FieldState":
        return cls(float(t), *map(float, y))

    def as_vector(self) -> np.ndarray:
        return np.array(self[1:], dtype=float)


def _require_positive_u(u):
    if np.any(np.asarray(u) <= 0.0):
        raise DomainError("u must be positive")


def potential_eval(spec: PotentialSpec, w, z):
    if spec.kind is PotentialKind.I:
        return spec.v0 * w * w * np.exp(2.0 * z)
    return spec.v0 + 0.0 * np.asarray(w, dtype=float)


def potential_gradient(spec: PotentialSpec, w, z):
    """(dV/dw, dV/dz)."""
    if spec.kind is PotentialKind.I:
        e2z = np.exp(2.0 * z)
        return 2.0 * spec.v0 * w * e2z, 2.0 * spec.v0 * w * w * e2z
    zero = 0.0 * np.asarray(w, dtype=float)
    return zero, zero


def _kinetic(u, z, du, dw, dz):
    return -0.5 * du * du + 0.5 * u * u * (dz * dz + dw * dw * np.exp(2.0 * z))


def lagrangian_eval(s: FieldState, spec: PotentialSpec):
    _require_positive_u(s.u)
    return _kinetic(s.u, s.z, s.du, s.dw, s.dz) - s.u * s.u * potential_eval(spec, s.w, s.z)


def hamiltonian_eval(s: FieldState, spec: PotentialSpec):
    _require_positive_u(s.u)
    return _kinetic(s.u, s.z, s.du, s.dw, s.dz) + s.u * s.u * potential_eval(spec, s.w, s.z)


def momenta(s: FieldState):
    """dL/d(velocity) = (-u_dot, u^2 e^{2z} w_dot, u^2 z_dot)."""
    _require_positive_u(s.u)
    return (-s.du, s.u * s.u * np.exp(2.0 * s.z) * s.dw, s.u * s.u * s.dz)


def scalefactor_potential(spec: PotentialSpec) -> PotentialSpec:
    """Potential amplitude that makes the scale-factor Lagrangian match.

    With a^3 = (3/8) u^2 the kinetic terms of the two charts agree, while the
    potential term -a^3 V picks up a factor 3/8 relative to -u^2 V.  Feeding
    the scale-factor Lagrangian V0 * 8/3 restores the equality.
    """
    return PotentialSpec(spec.kind, spec.v0 * 8.0 / 3.0)


def lagrangian_scalefactor_eval(a, da, w, z, dw, dz, spec: PotentialSpec):
    """-3 a a_dot^2 + a^3 H_AB phi_dot^A phi_dot^B / 2 - a^3 V.

    H_AB = (8/3) diag(1, e^{2z}) over (z, w).  The a^3 weight on the scalar
    kinetic term is required for the change of variables to the u chart.
    """
    if np.any(np.asarray(a) <= 0.0):
        raise DomainError("scale factor must be positive")
    a3 = a * a * a
    field_kinetic = (8.0 / 3.0) * 0.5 * (dz * dz + np.exp(2.0 * z) * dw * dw)
    return -3.0 * a * da * da + a3 * field_kinetic - a3 * potential_eval(spec, w, z)


def eom_rhs(s: FieldState, spec: PotentialSpec):
    """Accelerations (u_ddot, w_ddot, z_ddot) from the Euler-Lagrange equations."""
    _require_positive_u(s.u)
    return _accelerations(*s[1:], spec)


def _accelerations(u, w, z, du, dw, dz, spec: PotentialSpec):
    # Unchecked: trial stages near a singularity may step past u = 0.
    e2z = np.exp(2.0 * z)
    V = potential_eval(spec, w, z)
    Vw, Vz = potential_gradient(spec, w, z)
    ddu = -e2z * u * dw * dw - u * dz * dz + 2.0 * u * V
    ddw = -(2.0 * e2z * u * dw * dz + 2.0 * e2z * du * dw + Vw * u) / (e2z * u)
    ddz = -(-e2z * u * dw * dw + Vz * u + 2.0 * du * dz) / u
    return ddu, ddw, ddz


class IntegrationStatus(enum.Enum):
    COMPLETED = "completed"
    SINGULARITY = "singularity"
    STEP_FAILURE = "step_failure"


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled solution of the field equations.

    ``y`` has one row per sample with columns (u, w, z, u_dot, w_dot, z_dot).
    """

    t: np.ndarray
    y: np.ndarray
    energy: np.ndarray
    charges: dict = field(default_factory=dict)
    spec: PotentialSpec | None = None
    status: IntegrationStatus = IntegrationStatus.COMPLETED
    t_stop: float = float("nan")
    rtol: float = 1e-12
    atol: float = 1e-14
    nfev: int = 0
    message: str = ""

    def __post_init__(self):
        for arr in (self.t, self.y, self.energy, *self.charges.values()):
            arr.setflags(write=False)

    def __len__(self):
        return len(self.t)

    def state(self, k: int) -> FieldState:
        return FieldState.from_vector(self.t[k], self.y[k])

    def states(self) -> FieldState:
        """All samples as one FieldState of arrays."""
        return FieldState(self.t, *self.y.T)

    @property
    def energy_drift(self) -> float:
        e0 = self.energy[0]
        return float(np.max(np.abs(self.energy - e0)) / (1.0 + abs(e0)))


def _output_grid(t0: float, t_end: float, dt_out: float) -> np.ndarray:
    n = int(math.floor((t_end - t0) / dt_out + 1e-9))
    return t0 + dt_out * np.arange(n + 1)


def integrate(
    s0: FieldState,
    spec: PotentialSpec,
    t_end: float,
    tol: float = 1e-12,
    *,
    atol: float | None = None,
    dt_out: float | None = None,
    integrals: Iterable = (),
    u_min: float = U_MIN,
) -> Trajectory:
    """Integrate the field equations from ``s0`` up to time ``t_end``.

    Uses the 8(5,3) Dormand-Prince pair with relative tolerance ``tol``
    (absolute tolerance defaults to ``tol / 100``).  Samples lie on the grid
    ``s0.t + k * dt_out``; the default ``dt_out`` gives 1000 intervals.
    Reaching ``u <= u_min`` ends the run with status ``SINGULARITY`` and keeps
    only the samples computed before that point.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if not t_end > s0.t:
        raise ValueError("t_end must exceed the initial time")
    _require_positive_u(s0.u)
    if atol is None:
        atol = tol * 1e-2
    if dt_out is None:
        dt_out = (t_end - s0.t) / 1000.0
    if not dt_out > 0.0:
        raise ValueError("dt_out must be positive")

    def rhs(t, y):
        ddu, ddw, ddz = _accelerations(*y, spec)
        return [y[3], y[4], y[5], ddu, ddw, ddz]

    def hit_singularity(t, y):
        return y[0] - u_min

    hit_singularity.terminal = True
    hit_singularity.direction = -1

    grid = _output_grid(s0.t, t_end, dt_out)
    sol = solve_ivp(
        rhs,
        (s0.t, grid[-1]),
        s0.as_vector(),
        method="DOP853",
        t_eval=grid,
        rtol=tol,
        atol=atol,
        events=hit_singularity,
    )
    if sol.status == 1:
        status = IntegrationStatus.SINGULARITY
        t_stop = float(sol.t_events[0][0])
    elif sol.status == 0:
        status = IntegrationStatus.COMPLETED
        t_stop = float(grid[-1])
    else:
        status = IntegrationStatus.STEP_FAILURE
        t_stop = float(sol.t[-1]) if sol.t.size else s0.t

    t = np.asarray(sol.t, dtype=float)
    y = np.ascontiguousarray(sol.y.T)
    states = FieldState(t, *y.T)
    energy = np.asarray(hamiltonian_eval(states, spec), dtype=float) if t.size else np.empty(0)

    charges = {}
    ids = list(integrals)
    if ids:
        from .symmetries import integral_eval  # local import: symmetries builds on this module

        for iid in ids:
            charges[iid] = np.asarray(integral_eval(iid, states, spec), dtype=float)

    return Trajectory(
        t=t,
        y=y,
        energy=energy,
        charges=charges,
        spec=spec,
        status=status,
        t_stop=t_stop,
        rtol=tol,
        atol=atol,
        nfev=int(sol.nfev),
        message=str(sol.message),
    )
