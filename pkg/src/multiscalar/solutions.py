"""Closed-form solutions and background observables.

In normal coordinates both models are linear.  Potential I gives free
motion in (x, y) and a harmonic oscillator in s with frequency
vbar = sqrt(2 V0); potential II gives exponentials e^{+-vbar t} in every
direction.  The scale factor follows from a^3 = (3/8) u^2
= (3/8)(x^2 - y^2 - s^2).

Sign conventions: H = a_dot / a, q = -1 - H_dot / H^2 and
w_eff = -1 - (2/3) H_dot / H^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .dynamics import PotentialKind, PotentialSpec
from .errors import DomainError
from .transforms import NormalState

__all__ = [
    "ExactSolutionParams",
    "ObservableSample",
    "LambdaCosmologyParams",
    "potential1_solution",
    "potential2_solution",
    "exact_solution",
    "energy_potential1",
    "energy_potential2",
    "singularity_constraint_potential1",
    "singularity_constraint_potential2",
    "scale_factor",
    "scale_factor_cubed_potential1",
    "scale_factor_cubed_reduced",
    "scale_factor_cubed_potential2",
    "hubble_potential1",
    "deceleration_potential1",
    "observables_potential1",
    "hubble_potential2",
    "deceleration_potential2",
    "observables_potential2",
    "lambda_special_case",
    "lambda_special_case_quarter_e",
    "lambda_cosmology_scale_factor_cubed",
    "lambda_identification",
    "w_eff",
]


@dataclass(frozen=True)
class ExactSolutionParams:
    s0: float = 0.0
    s1: float = 0.0
    x0: float = 0.0
    x1: float = 0.0
    y0: float = 0.0
    y1: float = 0.0
    v0: float = 0.5

    def __post_init__(self):
        if not (math.isfinite(self.v0) and self.v0 > 0.0):
            raise ValueError(f"V0 must be positive, got {self.v0!r}")

    @property
    def vbar(self) -> float:
        return math.sqrt(2.0 * self.v0)

    @classmethod
    def from_vbar(cls, vbar: float, **kw) -> "ExactSolutionParams":
        return cls(v0=0.5 * vbar * vbar, **kw)

    @classmethod
    def reduced(cls, s0: float, vbar: float, x0: float | None = None, y0: float | None = None):
        """Parameters with s1 = s0, x1 = x0, y1 = y0 and a big-bang at t = 0.

        The singularity condition then reads x0^2 - y0^2 = s0^2.  Missing
        values default to y0 = 0 and x0 = sqrt(s0^2 + y0^2).
        """
        if y0 is None:
            y0 = 0.0
        if x0 is None:
            x0 = math.sqrt(s0 * s0 + y0 * y0)
        return cls.from_vbar(vbar, s0=s0, s1=s0, x0=x0, x1=x0, y0=y0, y1=y0)

    def is_reduced(self, tol: float = 1e-12) -> bool:
        scale = 1.0 + max(abs(self.s0), abs(self.x0), abs(self.y0)) ** 2
        return (
            self.s0 == self.s1
            and self.x0 == self.x1
            and self.y0 == self.y1
            and abs(self.x0**2 - self.y0**2 - self.s0**2) <= tol * scale
        )


class ObservableSample(NamedTuple):
    t: float
    a: float
    H: float
    q: float
    w_eff: float


@dataclass(frozen=True)
class LambdaCosmologyParams:
    omega_m0: float
    h0: float

    def __post_init__(self):
        if not 0.0 < self.omega_m0 < 1.0:
            raise ValueError("omega_m0 must lie in (0, 1)")
        if not self.h0 > 0.0:
            raise ValueError("h0 must be positive")

    @property
    def k(self) -> float:
        return 1.5 * self.h0 * math.sqrt(1.0 - self.omega_m0)


# --------------------------------------------------------------------------
# solutions in normal coordinates


def potential1_solution(p: ExactSolutionParams, t) -> NormalState:
    vb = p.vbar
    sn, cs = np.sin(vb * t), np.cos(vb * t)
    s = p.s0 * sn + p.s1 * cs
    ds = vb * (p.s0 * cs - p.s1 * sn)
    return NormalState(t, p.x0 * t + p.x1, p.y0 * t + p.y1, s, p.x0 + 0.0 * t, p.y0 + 0.0 * t, ds)


def potential2_solution(p: ExactSolutionParams, t) -> NormalState:
    vb = p.vbar
    ep, em = np.exp(vb * t), np.exp(-vb * t)

    def mode(c0, c1):
        return c0 * ep + c1 * em, vb * (c0 * ep - c1 * em)

    x, dx = mode(p.x0, p.x1)
    y, dy = mode(p.y0, p.y1)
    s, ds = mode(p.s0, p.s1)
    return NormalState(t, x, y, s, dx, dy, ds)


def exact_solution(kind: PotentialKind | int, p: ExactSolutionParams, t) -> NormalState:
    if PotentialKind(kind) is PotentialKind.I:
        return potential1_solution(p, t)
    return potential2_solution(p, t)


def energy_potential1(p: ExactSolutionParams) -> float:
    return p.s1**2 * p.v0 + p.v0 * p.s0**2 + 0.5 * p.y0**2 - 0.5 * p.x0**2


def energy_potential2(p: ExactSolutionParams) -> float:
    return -4.0 * (p.y0 * p.y1 - p.x0 * p.x1 + p.s0 * p.s1) * p.v0


def singularity_constraint_potential1(p: ExactSolutionParams) -> float:
    """Zero when a(0) = 0."""
    return p.x1**2 - p.y1**2 - p.s1**2


def singularity_constraint_potential2(p: ExactSolutionParams) -> float:
    """Zero when a(0) = 0."""
    return (
        -p.y0**2 - p.y1**2 + p.x0**2 + p.x1**2 - p.s0**2 - p.s1**2 + energy_potential2(p) / (2.0 * p.v0)
    )


# --------------------------------------------------------------------------
# scale factor


def scale_factor(n: NormalState):
    interval = n.x * n.x - n.y * n.y - n.s * n.s
    if np.any(np.asarray(interval) <= 0.0):
        raise DomainError("scale factor undefined on or outside the light cone")
    return np.cbrt(0.375 * interval)


def scale_factor_cubed_potential1(p: ExactSolutionParams, t):
    vb = p.vbar
    s = p.s0 * np.sin(vb * t) + p.s1 * np.cos(vb * t)
    return 0.375 * ((p.x0 * t + p.x1) ** 2 - (p.y0 * t + p.y1) ** 2 - s * s)


def _reduced_poly(vbar: float, t):
    """f = t^2 + 2t - sin(2 vbar t) with its first two derivatives."""
    arg = 2.0 * vbar * t
    f = t * t + 2.0 * t - np.sin(arg)
    df = 2.0 * t + 2.0 - 2.0 * vbar * np.cos(arg)
    ddf = 2.0 + 4.0 * vbar * vbar * np.sin(arg)
    return f, df, ddf


def _require_reduced(p: ExactSolutionParams):
    if not p.is_reduced():
        raise ValueError("closed forms need s1 = s0, x1 = x0, y1 = y0 and x0^2 - y0^2 = s0^2")


def scale_factor_cubed_reduced(p: ExactSolutionParams, t):
    """(3/8) s0^2 (t^2 + 2t - sin(2 vbar t))."""
    _require_reduced(p)
    f, _, _ = _reduced_poly(p.vbar, t)
    return 0.375 * p.s0**2 * f


def hubble_potential1(p: ExactSolutionParams, t):
    _require_reduced(p)
    vb = p.vbar
    c2 = np.cos(2.0 * vb * t)
    s2 = np.sin(2.0 * vb * t)
    return (2.0 * vb * c2 - 2.0 * t - 2.0) / (-3.0 * t * t + 3.0 * s2 - 6.0 * t)


def deceleration_potential1(p: ExactSolutionParams, t):
    _require_reduced(p)
    vb = p.vbar
    c2 = np.cos(2.0 * vb * t)
    s2 = np.sin(2.0 * vb * t)
    den = (-vb * c2 + t + 1.0) ** 2
    first = (-2.0 * c2 * c2 * vb * vb - 8.0 * vb * (t + 1.0) * c2) / (2.0 * den)
    second = 0.5 * ((3.0 + (-6.0 * t * t - 12.0 * t) * vb * vb) * s2 + t * t + 6.0 * vb * vb + 2.0 * t + 4.0) / den
    return first + second


def observables_potential1(p: ExactSolutionParams, t) -> ObservableSample:
    _require_reduced(p)
    f, df, ddf = _reduced_poly(p.vbar, t)
    if np.any(np.asarray(f) <= 0.0):
        raise DomainError("a^3 <= 0: outside the expanding branch")
    H = hubble_potential1(p, t)
    dH = (ddf * f - df * df) / (3.0 * f * f)
    return ObservableSample(
        t, np.cbrt(0.375 * p.s0**2 * f), H, deceleration_potential1(p, t), w_eff(H, dH)
    )


def _potential2_quadratics(p: ExactSolutionParams):
    a = p.x0**2 - p.y0**2 - p.s0**2
    b = p.x0 * p.x1 - p.y0 * p.y1 - p.s0 * p.s1
    c = p.x1**2 - p.y1**2 - p.s1**2
    return a, b, c


def scale_factor_cubed_potential2(p: ExactSolutionParams, t):
    vb = p.vbar
    ep, em = np.exp(vb * t), np.exp(-vb * t)
    return 0.375 * (
        (p.x0 * ep + p.x1 * em) ** 2 - (p.y0 * ep + p.y1 * em) ** 2 - (p.s0 * ep + p.s1 * em) ** 2
    )


def hubble_potential2(p: ExactSolutionParams, t):
    vb = p.vbar
    e2, e4 = np.exp(2.0 * vb * t), np.exp(4.0 * vb * t)
    num = 2.0 * (e4 * (p.y0**2 - p.x0**2 + p.s0**2) - p.y1**2 + p.x1**2 - p.s1**2) * vb
    den = (
        (3 * p.y0**2 - 3 * p.x0**2 + 3 * p.s0**2) * e4
        + (6 * p.y0 * p.y1 - 6 * p.x0 * p.x1 + 6 * p.s0 * p.s1) * e2
        + 3 * p.y1**2
        - 3 * p.x1**2
        + 3 * p.s1**2
    )
    return num / den


def deceleration_potential2(p: ExactSolutionParams, t):
    vb = p.vbar
    e2, e4 = np.exp(2.0 * vb * t), np.exp(4.0 * vb * t)
    e6, e8 = np.exp(6.0 * vb * t), np.exp(8.0 * vb * t)
    P = p.y0**2 - p.x0**2 + p.s0**2
    Q = p.y1**2 - p.x1**2 + p.s1**2
    e_over = energy_potential2(p) / (4.0 * p.v0)
    den = (P * e4 - Q) ** 2
    return (-10.0 * Q * P * e4 + 6.0 * Q * e_over * e2) / den + (
        6.0 * P * e_over * e6 - P * P * e8 - Q * Q
    ) / den


def observables_potential2(p: ExactSolutionParams, t) -> ObservableSample:
    a3 = scale_factor_cubed_potential2(p, t)
    if np.any(np.asarray(a3) <= 0.0):
        raise DomainError("a^3 <= 0")
    A, B, C = _potential2_quadratics(p)
    vb = p.vbar
    ep, em = np.exp(2.0 * vb * t), np.exp(-2.0 * vb * t)
    F = A * ep + 2.0 * B + C * em
    dF = 2.0 * vb * (A * ep - C * em)
    ddF = 4.0 * vb * vb * (A * ep + C * em)
    H = hubble_potential2(p, t)
    dH = (ddF * F - dF * dF) / (3.0 * F * F)
    return ObservableSample(t, np.cbrt(a3), H, deceleration_potential2(p, t), w_eff(H, dH))


# --------------------------------------------------------------------------
# Lambda-like special case of potential II


def _require_lambda_case(p: ExactSolutionParams):
    if not (p.x0 == -p.x1 and p.y0 == -p.y1 and p.s0 == -p.s1):
        raise ValueError("the Lambda-like case needs x1 = -x0, y1 = -y0, s1 = -s0")


def lambda_special_case(p: ExactSolutionParams, t):
    """a^3 = -(3/8) (E / V0) sinh^2(vbar t) for x1 = -x0, y1 = -y0, s1 = -s0.

    Equal to the general potential-II scale factor under that restriction,
    where E = -4 (x0^2 - y0^2 - s0^2) V0 is negative on the expanding branch.
    """
    _require_lambda_case(p)
    return -0.375 * energy_potential2(p) / p.v0 * np.sinh(p.vbar * t) ** 2


def lambda_special_case_quarter_e(p: ExactSolutionParams, t):
    """Variant with amplitude (3/8) E / (4 V0).

    It is -1/4 of the true restriction; kept so the discrepancy can be
    measured rather than assumed.
    """
    _require_lambda_case(p)
    return 0.375 * energy_potential2(p) / (4.0 * p.v0) * np.sinh(p.vbar * t) ** 2


def lambda_cosmology_scale_factor_cubed(lp: LambdaCosmologyParams, t):
    """Matter plus cosmological constant: (Om/(1-Om)) sinh^2(k t)."""
    return lp.omega_m0 / (1.0 - lp.omega_m0) * np.sinh(lp.k * t) ** 2


def lambda_identification(p: ExactSolutionParams) -> LambdaCosmologyParams:
    """Lambda-CDM parameters reproducing the special case with k = vbar."""
    _require_lambda_case(p)
    amp = -0.375 * energy_potential2(p) / p.v0
    if not amp > 0.0:
        raise DomainError("the special case does not expand (E >= 0)")
    om = amp / (1.0 + amp)
    h0 = p.vbar / (1.5 * math.sqrt(1.0 - om))
    return LambdaCosmologyParams(om, h0)


def w_eff(H, dH):
    """Effective equation of state of a flat FRW background."""
    H = np.asarray(H, dtype=float)
    if np.any(H == 0.0):
        raise ZeroDivisionError("w_eff undefined where H = 0")
    out = -1.0 - (2.0 / 3.0) * np.asarray(dH) / (H * H)
    return float(out) if out.ndim == 0 else out


def potential_spec(p: ExactSolutionParams, kind: PotentialKind | int) -> PotentialSpec:
    return PotentialSpec(PotentialKind(kind), p.v0)
