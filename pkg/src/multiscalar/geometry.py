"""Geometry of the three-dimensional minisuperspace.

The kinetic term of the point-like Lagrangian defines the Lorentzian metric

    ds^2 = -du^2 + u^2 (dz^2 + e^{2z} dw^2)

on the half-space u > 0.  Every tensor in this module uses the coordinate
order (u, w, z), so ``g[1, 1]`` is the w-w component.

The metric is flat; it carries three translations T1-T3, three rotations
R1-R3 spanning so(3), the homothety u d/du, and a 20-parameter family of
covariant rank-2 Killing tensors.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Sequence

import numpy as np

from ._killing_terms import COMPONENTS, INDEX, TERMS
from .errors import DomainError

__all__ = [
    "Point",
    "VectorFieldId",
    "KillingTensorParams",
    "metric_at",
    "inverse_metric_at",
    "christoffel_at",
    "christoffel_derivative_at",
    "riemann_at",
    "riemann_from_connection",
    "riemann_norm_at",
    "killing_vector_at",
    "killing_vector_jacobian",
    "lie_derivative_metric",
    "killing_tensor_at",
    "killing_tensor_gradient",
    "killing_residual",
    "killing_tensor_basis",
    "symmetrized_covariant_derivative",
    "KILLING_VECTORS",
]

U, W, Z = 0, 1, 2


class Point(NamedTuple):
    u: float
    w: float
    z: float


def _check(p) -> Point:
    p = Point(*map(float, p))
    if not p.u > 0.0:
        raise DomainError(f"u must be positive, got u={p.u!r}")
    return p


def metric_at(p: Point) -> np.ndarray:
    """diag(-1, u^2 e^{2z}, u^2)."""
    u, _, z = _check(p)
    return np.diag([-1.0, u * u * np.exp(2.0 * z), u * u])


def inverse_metric_at(p: Point) -> np.ndarray:
    u, _, z = _check(p)
    return np.diag([-1.0, np.exp(-2.0 * z) / (u * u), 1.0 / (u * u)])


def christoffel_at(p: Point) -> np.ndarray:
    """Levi-Civita connection, ``G[i, j, k] = Gamma^i_{jk}``."""
    u, _, z = _check(p)
    e2z = np.exp(2.0 * z)
    G = np.zeros((3, 3, 3))
    G[U, W, W] = u * e2z
    G[U, Z, Z] = u
    G[W, U, W] = G[W, W, U] = 1.0 / u
    G[W, W, Z] = G[W, Z, W] = 1.0
    G[Z, U, Z] = G[Z, Z, U] = 1.0 / u
    G[Z, W, W] = -e2z
    return G


def christoffel_derivative_at(p: Point) -> np.ndarray:
    """``dG[i, j, k, l] = d Gamma^i_{jk} / d x^l``."""
    u, _, z = _check(p)
    e2z = np.exp(2.0 * z)
    dG = np.zeros((3, 3, 3, 3))
    dG[U, W, W, U] = e2z
    dG[U, W, W, Z] = 2.0 * u * e2z
    dG[U, Z, Z, U] = 1.0
    dG[W, U, W, U] = dG[W, W, U, U] = -1.0 / (u * u)
    dG[Z, U, Z, U] = dG[Z, Z, U, U] = -1.0 / (u * u)
    dG[Z, W, W, Z] = -2.0 * e2z
    return dG


def riemann_from_connection(G: np.ndarray, dG: np.ndarray) -> np.ndarray:
    """``R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj}``.

    ``G`` and ``dG`` follow the layout of ``christoffel_at`` and
    ``christoffel_derivative_at``; any metric's connection can be passed.
    """
    R = np.einsum("iljk->ijkl", dG) - np.einsum("ikjl->ijkl", dG)
    R += np.einsum("ikm,mlj->ijkl", G, G) - np.einsum("ilm,mkj->ijkl", G, G)
    return R


def riemann_at(p: Point) -> np.ndarray:
    """``R[i, j, k, l] = R^i_{jkl}`` built from the analytic connection."""
    return riemann_from_connection(christoffel_at(p), christoffel_derivative_at(p))


def riemann_norm_at(p: Point) -> float:
    return float(np.max(np.abs(riemann_at(p))))


class VectorFieldId(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    HOM = "HOM"


KILLING_VECTORS = tuple(v for v in VectorFieldId if v is not VectorFieldId.HOM)


def _vector_components(vid: VectorFieldId, u, w, z):
    # Works for complex arguments, which killing_vector_jacobian relies on.
    ez, emz = np.exp(z), np.exp(-z)
    if vid is VectorFieldId.T1:
        return (ez * w * w + emz, -2.0 * w * emz / u, (-ez * w * w + emz) / u)
    if vid is VectorFieldId.T2:
        return (-ez * w, emz / u, ez * w / u)
    if vid is VectorFieldId.T3:
        return (-ez, 0.0 * u, ez / u)
    if vid is VectorFieldId.R1:
        return (0.0 * u, 1.0 + 0.0 * u, 0.0 * u)
    if vid is VectorFieldId.R2:
        # d_z - w d_w; with +w the e^{2z} dw^2 term is not preserved
        return (0.0 * u, -w, 1.0 + 0.0 * u)
    if vid is VectorFieldId.R3:
        return (0.0 * u, -0.5 * (w * w - emz * emz), w + 0.0 * u)
    if vid is VectorFieldId.HOM:
        return (u, 0.0 * u, 0.0 * u)
    raise ValueError(f"unknown vector field {vid!r}")


def killing_vector_at(vid: VectorFieldId | str, p: Point) -> np.ndarray:
    """Contravariant components of a symmetry generator of the metric."""
    vid = VectorFieldId(vid)
    u, w, z = _check(p)
    return np.array(_vector_components(vid, u, w, z), dtype=float)


def killing_vector_jacobian(vid: VectorFieldId | str, p: Point) -> np.ndarray:
    """``J[i, k] = d X^i / d x^k`` by complex-step differentiation."""
    vid = VectorFieldId(vid)
    x = np.array(_check(p), dtype=complex)
    h = 1e-30
    J = np.empty((3, 3))
    for k in range(3):
        xk = x.copy()
        xk[k] += 1j * h
        J[:, k] = np.imag(np.array(_vector_components(vid, *xk), dtype=complex)) / h
    return J


def lie_derivative_metric(vid: VectorFieldId | str, p: Point) -> np.ndarray:
    """(L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k."""
    p = _check(p)
    X = killing_vector_at(vid, p)
    J = killing_vector_jacobian(vid, p)
    u, _, z = p
    g = metric_at(p)
    dg = np.zeros((3, 3, 3))  # dg[i, j, k] = d_k g_ij
    e2z = np.exp(2.0 * z)
    dg[W, W, U] = 2.0 * u * e2z
    dg[W, W, Z] = 2.0 * u * u * e2z
    dg[Z, Z, U] = 2.0 * u
    return np.einsum("k,ijk->ij", X, dg) + np.einsum("kj,ki->ij", g, J) + np.einsum("ik,kj->ij", g, J)


class KillingTensorParams(NamedTuple):
    """The constants c_1..c_20 of the Killing-tensor family (0-based storage)."""

    c: tuple

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "KillingTensorParams":
        values = tuple(float(v) for v in values)
        if len(values) != 20:
            raise ValueError(f"expected 20 constants, got {len(values)}")
        if not all(np.isfinite(values)):
            raise ValueError("Killing-tensor constants must be finite")
        return cls(values)

    @classmethod
    def unit(cls, k: int) -> "KillingTensorParams":
        """Only c_k = 1 (1-based ``k``)."""
        c = [0.0] * 20
        c[k - 1] = 1.0
        return cls(tuple(c))

    def __add__(self, other):  # componentwise, unlike tuple concatenation
        return KillingTensorParams(tuple(a + b for a, b in zip(self.c, other.c)))


def _as_params(params) -> np.ndarray:
    c = params.c if isinstance(params, KillingTensorParams) else params
    c = np.asarray(c, dtype=float)
    if c.shape != (20,):
        raise ValueError(f"expected 20 constants, got shape {c.shape}")
    return c


def killing_tensor_basis(p: Point, derivative: int | None = None) -> np.ndarray:
    """``B[i, j, k]`` such that ``K_ij = sum_k B[i, j, k] c_{k+1}``.

    With ``derivative`` set to 0, 1 or 2 the partial derivative of the basis
    with respect to u, w or z is returned instead.
    """
    u, w, z = _check(p)
    B = np.zeros((3, 3, 20))
    for name in COMPONENTS:
        i, j = INDEX[name]
        for k, num, den, pu, pw, nz in TERMS[name]:
            coef = num / den
            if derivative == U:
                coef *= pu
                pu -= 1
            elif derivative == W:
                coef *= pw
                pw -= 1
            elif derivative == Z:
                coef *= nz
            if coef == 0.0:
                continue
            B[i, j, k - 1] += coef * u**pu * w**pw * np.exp(nz * z)
        B[j, i] = B[i, j]
    return B


def killing_tensor_at(params, p: Point) -> np.ndarray:
    """Covariant Killing tensor K_ij for the given constants."""
    return killing_tensor_basis(p) @ _as_params(params)


def killing_tensor_gradient(params, p: Point) -> np.ndarray:
    """``dK[i, j, k] = d_k K_ij`` (exact, from the monomial expansion)."""
    c = _as_params(params)
    return np.stack([killing_tensor_basis(p, d) @ c for d in (U, W, Z)], axis=-1)


def symmetrized_covariant_derivative(K: np.ndarray, dK: np.ndarray, G: np.ndarray) -> np.ndarray:
    """S_ijk = K_(ij;k) up to the 1/3 normalisation, i.e. the cyclic sum."""
    # nabla_k K_ij = d_k K_ij - G^l_{ki} K_lj - G^l_{kj} K_il
    nabla = dK - np.einsum("lki,lj->ijk", G, K) - np.einsum("lkj,il->ijk", G, K)
    return nabla + np.einsum("ijk->jki", nabla) + np.einsum("ijk->kij", nabla)


def killing_residual(params, p: Point) -> float:
    """Largest component of the cyclic sum of covariant derivatives of K."""
    p = _check(p)
    c = _as_params(params)
    if not np.any(c):
        return 0.0
    S = symmetrized_covariant_derivative(
        killing_tensor_at(c, p), killing_tensor_gradient(c, p), christoffel_at(p)
    )
    return float(np.max(np.abs(S)))
