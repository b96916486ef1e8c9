"""Normal coordinates (x, y, s) in which the kinetic term is constant.

    u^2 = x^2 - y^2 - s^2,   w = s / (x + y),   z = ln((x + y) / u)

with inverse

    x = (u/2)(e^z + e^{-z} + w^2 e^z)
    y = (u/2)(e^z - e^{-z} - w^2 e^z)
    s = u w e^z

The chart covers the interior of the future light cone x^2 - y^2 - s^2 > 0
with x + y > 0.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .dynamics import FieldState, PotentialKind, PotentialSpec
from .errors import DomainError

__all__ = [
    "NormalState",
    "to_field",
    "to_normal",
    "normal_potential",
    "lagrangian_normal_eval",
    "hamiltonian_normal_eval",
    "normal_eom_rhs",
]


class NormalState(NamedTuple):
    t: float
    x: float
    y: float
    s: float
    dx: float
    dy: float
    ds: float

    def as_vector(self) -> np.ndarray:
        return np.array(self[1:], dtype=float)


def _interval(x, y, s):
    return x * x - y * y - s * s


def _check_normal(n: NormalState):
    if np.any(np.asarray(_interval(n.x, n.y, n.s)) <= 0.0):
        raise DomainError("x^2 - y^2 - s^2 must be positive")
    if np.any(np.asarray(n.x + n.y) <= 0.0):
        raise DomainError("x + y must be positive")


def to_field(n: NormalState) -> FieldState:
    _check_normal(n)
    t, x, y, s, dx, dy, ds = n
    u = np.sqrt(_interval(x, y, s))
    xy = x + y
    w = s / xy
    z = np.log(xy / u)
    du = (x * dx - y * dy - s * ds) / u
    dw = ds / xy - s * (dx + dy) / (xy * xy)
    dz = (dx + dy) / xy - du / u
    return FieldState(t, u, w, z, du, dw, dz)


def to_normal(f: FieldState) -> NormalState:
    t, u, w, z, du, dw, dz = f
    if np.any(np.asarray(u) <= 0.0):
        raise DomainError("u must be positive")
    ez, emz = np.exp(z), np.exp(-z)
    w2ez = w * w * ez
    x = 0.5 * u * (ez + emz + w2ez)
    y = 0.5 * u * (ez - emz - w2ez)
    s = u * w * ez
    # Jacobian rows d(x, y, s)/d(u, w, z)
    dx = (x / u) * du + u * w * ez * dw + 0.5 * u * (ez - emz + w2ez) * dz
    dy = (y / u) * du - u * w * ez * dw + 0.5 * u * (ez + emz - w2ez) * dz
    ds = w * ez * du + u * ez * dw + s * dz
    return NormalState(t, x, y, s, dx, dy, ds)


def normal_potential(n: NormalState, spec: PotentialSpec):
    """Effective potential u^2 V expressed in normal coordinates."""
    if spec.kind is PotentialKind.I:
        return spec.v0 * n.s * n.s
    return spec.v0 * _interval(n.x, n.y, n.s)


def lagrangian_normal_eval(n: NormalState, spec: PotentialSpec):
    _check_normal(n)
    return -0.5 * n.dx**2 + 0.5 * n.dy**2 + 0.5 * n.ds**2 - normal_potential(n, spec)


def hamiltonian_normal_eval(n: NormalState, spec: PotentialSpec):
    """Energy in normal coordinates; defined on the whole plane."""
    return -0.5 * n.dx**2 + 0.5 * n.dy**2 + 0.5 * n.ds**2 + normal_potential(n, spec)


def normal_eom_rhs(n: NormalState, spec: PotentialSpec):
    """(x_ddot, y_ddot, s_ddot); the equations are linear and decoupled."""
    v2 = 2.0 * spec.v0
    if spec.kind is PotentialKind.I:
        zero = 0.0 * np.asarray(n.s, dtype=float)
        return zero, zero, -v2 * n.s
    return v2 * n.x, v2 * n.y, v2 * n.s
