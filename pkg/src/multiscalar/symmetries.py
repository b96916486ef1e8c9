"""Contact Noether symmetries and their quadratic first integrals.

Each generator X^k = X^i(x, x_dot) d_i is linear in the velocities.  Its
charge X^i dL/dx_dot^i equals the velocity-quadratic part of the matching
integral I^k; the remainder is the (position-only) boundary term.

Potential I (V0 w^2 e^{2z}) admits I1-I6, potential II (V0) admits I1, I3,
the shifted I4bar and I7-I13.  The potential term of I3 changes sign between
the two cases.
"""

from __future__ import annotations

import enum

import numpy as np

from .dynamics import FieldState, PotentialKind, PotentialSpec, Trajectory, momenta
from .errors import DomainError, InapplicableIntegralError, PoleError

__all__ = [
    "SymmetryId",
    "IntegralId",
    "EPS_POLE",
    "applicable_integrals",
    "integral_eval",
    "symmetry_eval",
    "symmetry_charge",
    "boundary_term",
    "paired_integral",
    "conservation_drift",
]

EPS_POLE = 1e-6


class SymmetryId(enum.Enum):
    X1 = 1
    X2 = 2
    X3 = 3
    X4 = 4
    X5 = 5
    X6 = 6
    X7 = 7
    X8 = 8
    X9 = 9
    X10 = 10
    X11 = 11
    X12 = 12
    X13 = 13


class IntegralId(enum.Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"
    I8 = "I8"
    I9 = "I9"
    I10 = "I10"
    I11 = "I11"
    I12 = "I12"
    I13 = "I13"
    I4bar = "I4bar"


_APPLICABLE = {
    PotentialKind.I: tuple(IntegralId(f"I{k}") for k in range(1, 7)),
    PotentialKind.II: (IntegralId.I1, IntegralId.I3, IntegralId.I4bar)
    + tuple(IntegralId(f"I{k}") for k in range(7, 14)),
}


def applicable_integrals(spec: PotentialSpec) -> list[IntegralId]:
    return list(_APPLICABLE[spec.kind])


def _check_applicable(iid: IntegralId, spec: PotentialSpec):
    if iid not in _APPLICABLE[spec.kind]:
        raise InapplicableIntegralError(f"{iid.value} is not a first integral for potential {spec.kind.name}")


# --------------------------------------------------------------------------
# integrals


def _i1(u, w, z, du, dw, dz, v0):
    return (w * w * dw * dw * np.exp(4 * z) - 2 * w * dw * dz * np.exp(2 * z) + dz * dz) * u**4


def _i2(u, w, z, du, dw, dz, v0):
    e2, e4, em2 = np.exp(2 * z), np.exp(4 * z), np.exp(-2 * z)
    num = (
        4 * e2 * u**2 * w**2 * dw**2
        - 4 * e4 * u**4 * w**2 * dw**2
        + 2 * e2 * u**4 * w**2 * dz**2
        - e4 * u**4 * w**4 * dz**2
        + e2 * u**2 * w**4 * dz**2
        + 4 * u * du * w * dw
        - 4 * u**2 * w * dw * dz
        - e4 * u**2 * du**2 * w**4
        - 2 * e2 * u**2 * du**2 * w**2
        - 2 * em2 * u * du * dz
        - 4 * e2 * u**3 * du * w * dw
        + 4 * e2 * u * du * w**3 * dw
        + 2 * e2 * u * du * w**4 * dz
        - 2 * e4 * u**3 * du * w**4 * dz
        - 4 * e4 * u**4 * w**3 * dw * dz
        - 4 * e4 * u**3 * du * w**3 * dw
        + 4 * e2 * u**4 * w * dw * dz
        + 4 * e2 * u**2 * w**3 * dw * dz
        + e2 * du**2 * w**4
        + 2 * u**3 * du * dz
        - 2 * u**2 * w**2 * dz**2
        + em2 * u**2 * dz**2
        - u**4 * dz**2
        - u**2 * du**2
        + 2 * du**2 * w**2
        + em2 * du**2
    )
    # The quotient is polynomial; the removable singularity at e^{2z}u^2 = 1
    # still costs precision there.
    return 0.5 * num / (e2 * u * u - 1.0)


def _i3_quadratic(u, w, z, du, dw, dz):
    return 0.5 * (
        -(u**2) * w**2 * dz**2
        - 2 * u**2 * w * dw * dz
        - 2 * u * w**2 * du * dz
        - u**2 * dw**2
        - 2 * u * w * du * dw
        - w**2 * du**2
    ) * np.exp(2 * z)


def _i3_potential_term(u, w, z, v0):
    return v0 * u**2 * w**2 * np.exp(2 * z)


def _i4(u, w, z, du, dw, dz, v0):
    return (-(u**2) * dz**2 - 2 * u * du * dz - du**2) * np.exp(2 * z)


def _i4bar(u, w, z, du, dw, dz, v0):
    return _i4(u, w, z, du, dw, dz, v0) + 2 * v0 * u**2 * np.exp(2 * z)


def _i5(u, w, z, du, dw, dz, v0):
    e1, e3, em1 = np.exp(z), np.exp(3 * z), np.exp(-z)
    return (
        2 * e3 * u**3 * w**2 * dw**2
        - e1 * u**3 * w**2 * dz**2
        + e3 * u**3 * w**3 * dw * dz
        - e1 * u**2 * du * w**2 * dz
        + e3 * u**2 * du * w**3 * dw
        + em1 * u**3 * dz**2
        - 3 * e1 * u**3 * w * dw * dz
        - em1 * u**2 * du * dz
        + e1 * u**2 * du * w * dw
    )


def _i6(u, w, z, du, dw, dz, v0):
    e2 = np.exp(2 * z)
    return (e2 * u * w * dw * dz + e2 * du * w * dw - u * dz**2 - du * dz) * u**2 * np.exp(z)


def _i7(u, w, z, du, dw, dz, v0):
    e2, em2 = np.exp(2 * z), np.exp(-2 * z)
    return (
        -e2 * u**2 * w**4 * dz**2
        + 2 * w**4 * v0 * u**2 * e2
        - 4 * e2 * u**2 * w**3 * dw * dz
        - 2 * e2 * u * du * w**4 * dz
        - 4 * e2 * u**2 * w**2 * dw**2
        - 4 * e2 * u * du * w**3 * dw
        - e2 * du**2 * w**4
        + 2 * u**2 * w**2 * dz**2
        - em2 * u**2 * dz**2
        + 4 * w**2 * v0 * u**2
        + 4 * u**2 * w * dw * dz
        + 2 * u**2 * v0 * em2
        + 2 * em2 * u * du * dz
        - 4 * u * du * w * dw
        - 2 * du**2 * w**2
        - em2 * du**2
    )


def _i8(u, w, z, du, dw, dz, v0):
    e2 = np.exp(2 * z)
    return (
        -e2 * u**2 * w**3 * dz**2
        + 2 * w**3 * v0 * u**2 * e2
        - 3 * e2 * u**2 * w**2 * dw * dz
        - 2 * e2 * u * du * w**3 * dz
        - 2 * e2 * u**2 * w * dw**2
        - 3 * e2 * u * du * w**2 * dw
        - e2 * du**2 * w**3
        + u**2 * w * dz**2
        + 2 * w * v0 * u**2
        + u**2 * dw * dz
        - u * du * dw
        - du**2 * w
    )


def _i9(u, w, z, du, dw, dz, v0):
    return (
        -(u**2) * w * dz**2
        + 2 * v0 * u**2 * w
        - u**2 * dw * dz
        - 2 * u * w * du * dz
        - u * du * dw
        - w * du**2
    ) * np.exp(2 * z)


def _i10(u, w, z, du, dw, dz, v0):
    e2, e4 = np.exp(2 * z), np.exp(4 * z)
    return (
        e4 * w**4 * dw**2
        - 4 * e2 * w**3 * dw * dz
        - 2 * e2 * w**2 * dw**2
        + dw**2
        + 4 * w**2 * dz**2
        + 4 * w * dw * dz
    ) * u**4 / 8


def _i11(u, w, z, du, dw, dz, v0):
    e2, e4 = np.exp(2 * z), np.exp(4 * z)
    return -0.5 * (
        -e4 * w**3 * dw**2 + 3 * e2 * w**2 * dw * dz + e2 * w * dw**2 - 2 * w * dz**2 - dw * dz
    ) * u**4


def _i12(u, w, z, du, dw, dz, v0):
    e2 = np.exp(2 * z)
    return -(w**2 * dw * e2 - 2 * w * dz - dw) * u**4 * e2 * dw


def _i13(u, w, z, du, dw, dz, v0):
    e2 = np.exp(2 * z)
    return 0.5 * (w * dw * e2 - dz) * u**4 * e2 * dw


_INTEGRALS = {
    IntegralId.I1: _i1,
    IntegralId.I2: _i2,
    IntegralId.I4: _i4,
    IntegralId.I4bar: _i4bar,
    IntegralId.I5: _i5,
    IntegralId.I6: _i6,
    IntegralId.I7: _i7,
    IntegralId.I8: _i8,
    IntegralId.I9: _i9,
    IntegralId.I10: _i10,
    IntegralId.I11: _i11,
    IntegralId.I12: _i12,
    IntegralId.I13: _i13,
}


def integral_eval(iid: IntegralId | str, s: FieldState, spec: PotentialSpec):
    """Value of a quadratic first integral at a state (or array of states)."""
    iid = IntegralId(iid)
    _check_applicable(iid, spec)
    u, w, z, du, dw, dz = s[1:]
    if np.any(np.asarray(u) <= 0.0):
        raise DomainError("u must be positive")
    if iid is IntegralId.I3:
        sign = 1.0 if spec.kind is PotentialKind.II else -1.0
        return _i3_quadratic(u, w, z, du, dw, dz) + sign * _i3_potential_term(u, w, z, spec.v0)
    return _INTEGRALS[iid](u, w, z, du, dw, dz, spec.v0)


# --------------------------------------------------------------------------
# generators

# ids whose coefficients divide by (u^2 - 1) and/or (e^{2z} u^2 - 1)
_POLES = {
    SymmetryId.X2: (True, True),
    SymmetryId.X3: (True, True),
    SymmetryId.X4: (True, False),
    SymmetryId.X5: (True, True),
    SymmetryId.X6: (True, True),
    SymmetryId.X7: (True, True),
    SymmetryId.X8: (True, True),
    SymmetryId.X9: (True, True),
}


def _x1(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    cross = 2 * e2 * w * u**2 / (e2 + 1)
    return 0.0 * du, e2 * u**2 * w**2 * dw - cross * dz, -cross * dw + u**2 * dz


def _x2(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    a = 0.5 * w**4 * e2 + w**2 + 0.5 * np.exp(-2 * z)
    b = 2 * u * w * (w**2 * e2 + 1) / (e2 * u**2 - 1)
    c = (
        np.exp(-z)
        * (np.exp(5 * z) * u**2 * w**4 - np.exp(3 * z) * w**4 - np.exp(z) * u**2 + np.exp(-z))
        * u
        / ((e2 * u**2 - 1) * (u**2 - 1))
    )
    d = 2 * w * (w**2 * e2 - 1) / (e2 + 1)
    zz = 0.5 * (-(w**4) * np.exp(4 * z) + 2 * w**2 * e2 - 1) * np.exp(-2 * z)
    return (
        a * du - b * dw - c * dz,
        -(b * du + 2 * w**2 * dw + d * dz),
        -(c * du + d * dw - zz * dz),
    )


def _x3(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    a = u * w * e2 / (e2 * u**2 - 1)
    b = e2 * u * w**2 / (u**2 - 1)
    c = w * e2 / (e2 + 1)
    return (
        0.5 * w**2 * e2 * du - a * dw - b * dz,
        -a * du - 0.5 * dw - c * dz,
        -b * du - c * dw - 0.5 * w**2 * e2 * dz,
    )


def _x4(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    b = 2 * e2 * u / (u**2 - 1)
    return e2 * du - b * dz, 0.0 * dw, -b * du - e2 * dz


def _x5(u, w, z, du, dw, dz):
    e1, e2 = np.exp(z), np.exp(2 * z)
    a = u**2 * w * e1 * (w**2 * e2 + 1) / (e2 * u**2 - 1)
    b = np.exp(-z) * (w**2 * e2 + 1) * u**2 / (u**2 - 1)
    c = w * (w**2 * e2 - 3) * e1 * u / (e2 + 1)
    return (
        a * dw - b * dz,
        a * du + 2 * e1 * u * w**2 * dw + c * dz,
        -b * du + c * dw - np.exp(-z) * u * (w**2 * e2 - 1) * dz,
    )


def _x6(u, w, z, du, dw, dz):
    e1, e2, e3 = np.exp(z), np.exp(2 * z), np.exp(3 * z)
    a = u**2 * w * e3 / (u**2 * e2 - 1)
    b = e1 * u**2 / (u**2 - 1)
    c = w * u * e3 / (e2 + 1)
    return a * dw - b * dz, a * du + c * dz, -b * du + c * dw - e1 * u * dz


def _x7(u, w, z, du, dw, dz):
    e2, em2 = np.exp(2 * z), np.exp(-2 * z)
    a = w**4 * e2 + 2 * w**2 + em2
    b = 4 * w * (w**2 * e2 + 1) * u / (e2 * u**2 - 1)
    c = 2 * u * (w**4 * e2 - em2) / (u**2 - 1)
    d = 4 * w * (w**2 * e2 - 1) / (e2 + 1)
    return (
        a * du - b * dw - c * dz,
        -b * du - 4 * w**2 * dw - d * dz,
        -c * du - d * dw + (-(w**4) * e2 - em2 + 2 * w**2) * dz,
    )


def _x8(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    a = w**3 * e2 + w
    b = (3 * w**2 * e2 + 1) * u / (-e2 * u**2 + 1)
    c = 2 * u * w**3 * e2 / (u**2 - 1)
    d = (3 * w**2 * e2 - 1) / (e2 + 1)
    return (
        a * du + b * dw - c * dz,
        b * du - 2 * w * dw - d * dz,
        -c * du - d * dw + (-(w**3) * e2 + w) * dz,
    )


def _x9(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    b = e2 * u / (-e2 * u**2 + 1)
    c = 2 * w * e2 * u / (u**2 - 1)
    d = e2 / (e2 + 1)
    return w * e2 * du + b * dw - c * dz, b * du - d * dz, -c * du - d * dw - w * e2 * dz


def _x10(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    d = 0.5 * u**2 * w * (w**2 * e2 - 1) / (e2 + 1)
    a = u**2 * (w**4 * e2 - 2 * w**2 + np.exp(-2 * z)) / 8
    return 0.0 * du, a * dw - d * dz, -d * dw + 0.5 * w**2 * u**2 * dz


def _x11(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    d = 0.5 * u**2 * (3 * w**2 * e2 - 1) / (e2 + 1)
    return 0.0 * du, 0.5 * u**2 * w * (w**2 * e2 - 1) * dw - d * dz, -d * dw + u**2 * w * dz


def _x12(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    d = 2 * w * e2 * u**2 / (e2 + 1)
    return 0.0 * du, -(u**2) * (w**2 * e2 - 1) * dw + d * dz, d * dw + 0.0 * dz


def _x13(u, w, z, du, dw, dz):
    e2 = np.exp(2 * z)
    d = 0.5 * e2 * u**2 / (e2 + 1)
    return 0.0 * du, 0.5 * u**2 * w * e2 * dw - d * dz, -d * dw + 0.0 * dz


_GENERATORS = {
    SymmetryId.X1: _x1,
    SymmetryId.X2: _x2,
    SymmetryId.X3: _x3,
    SymmetryId.X4: _x4,
    SymmetryId.X5: _x5,
    SymmetryId.X6: _x6,
    SymmetryId.X7: _x7,
    SymmetryId.X8: _x8,
    SymmetryId.X9: _x9,
    SymmetryId.X10: _x10,
    SymmetryId.X11: _x11,
    SymmetryId.X12: _x12,
    SymmetryId.X13: _x13,
}


def _symmetry_id(sid) -> SymmetryId:
    if isinstance(sid, str):
        return SymmetryId[sid]
    return SymmetryId(sid)


def symmetry_eval(sid: SymmetryId | str | int, s: FieldState, eps_pole: float = EPS_POLE) -> np.ndarray:
    """Components of the generator along (d_u, d_w, d_z) at a state."""
    sid = _symmetry_id(sid)
    u, w, z, du, dw, dz = s[1:]
    if np.any(np.asarray(u) <= 0.0):
        raise DomainError("u must be positive")
    near_u, near_eu = _POLES.get(sid, (False, False))
    if near_u and np.any(np.abs(u * u - 1.0) < eps_pole):
        raise PoleError(f"{sid.name} has a pole at u^2 = 1")
    if near_eu and np.any(np.abs(np.exp(2 * z) * u * u - 1.0) < eps_pole):
        raise PoleError(f"{sid.name} has a pole at e^(2z) u^2 = 1")
    return np.array(_GENERATORS[sid](u, w, z, du, dw, dz), dtype=float)


def symmetry_charge(sid, s: FieldState, spec: PotentialSpec | None = None):
    """X^i dL/dx_dot^i (the boundary term is not subtracted).

    ``spec`` is accepted for symmetry with ``integral_eval``; the momenta do
    not depend on the potential.
    """
    X = symmetry_eval(sid, s)
    p = momenta(s)
    return X[0] * p[0] + X[1] * p[1] + X[2] * p[2]


def paired_integral(sid, spec: PotentialSpec) -> IntegralId:
    """The integral generated by ``sid`` for the given potential."""
    sid = _symmetry_id(sid)
    if sid is SymmetryId.X4 and spec.kind is PotentialKind.II:
        iid = IntegralId.I4bar
    else:
        iid = IntegralId(f"I{sid.value}")
    _check_applicable(iid, spec)
    return iid


def boundary_term(sid, s: FieldState, spec: PotentialSpec):
    """B = X^i dL/dx_dot^i - I, recovered numerically.

    Along any solution this should depend on position only.
    """
    return symmetry_charge(sid, s, spec) - integral_eval(paired_integral(sid, spec), s, spec)


def conservation_drift(iid: IntegralId | str, traj: Trajectory, spec: PotentialSpec) -> float:
    """max_k |I(t_k) - I(t_0)| / (1 + |I(t_0)|) over the trajectory samples."""
    iid = IntegralId(iid)
    _check_applicable(iid, spec)
    values = traj.charges.get(iid)
    if values is None:
        values = np.asarray(integral_eval(iid, traj.states(), spec), dtype=float)
    i0 = values[0]
    return float(np.max(np.abs(values - i0)) / (1.0 + abs(i0)))
