"""Numerical verification suites behind ``multiscalar verify``.

Every suite draws its samples from a ``numpy.random.Generator`` (PCG64) so
a seed fixes the whole run.  Reports carry per-item residuals with their
own thresholds; the top-level residual is the worst item expressed as a
fraction of its threshold, so ``passed`` is simply ``max_residual < 1``
for mixed suites and ``max_residual < threshold`` for single-quantity ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from . import geometry as geo
from .dynamics import (
    FieldState,
    PotentialKind,
    PotentialSpec,
    eom_rhs,
    hamiltonian_eval,
    integrate,
    lagrangian_eval,
)
from .numdiff import richardson_derivative
from .solutions import (
    ExactSolutionParams,
    energy_potential1,
    energy_potential2,
    exact_solution,
)
from .symmetries import IntegralId, applicable_integrals, conservation_drift
from .transforms import (
    NormalState,
    hamiltonian_normal_eval,
    lagrangian_normal_eval,
    normal_eom_rhs,
    to_field,
    to_normal,
)

__all__ = [
    "VerificationReport",
    "Item",
    "FLAT_BOX",
    "TENSOR_BOX",
    "sample_points",
    "sample_exact_params",
    "random_initial_state",
    "verify_flatness",
    "verify_killing_vectors",
    "verify_killing_tensors",
    "verify_conservation",
    "verify_transform",
    "verify_exact_solutions",
    "CHECKS",
    "run_check",
]

#: (low, high) per coordinate u, w, z
FLAT_BOX = ((0.1, 10.0), (-5.0, 5.0), (-3.0, 3.0))
# The Killing-tensor components grow like u^4 e^{4|z|} w^4; in FLAT_BOX they
# reach ~1e12 and an absolute residual of 1e-8 is below rounding.
TENSOR_BOX = ((0.5, 2.0), (-1.0, 1.0), (-1.0, 1.0))


@dataclass
class Item:
    name: str
    residual: float
    threshold: float
    samples: int = 1

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.threshold)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "residual": self.residual,
            "threshold": self.threshold,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    check: str
    samples: int
    items: list[Item] = field(default_factory=list)
    threshold: float | None = None
    meta: dict = field(default_factory=dict)

    @property
    def normalized(self) -> bool:
        return self.threshold is None

    @property
    def max_residual(self) -> float:
        if not self.items:
            return float("nan")
        if self.normalized:
            return max(it.residual / it.threshold for it in self.items)
        return max(it.residual for it in self.items)

    @property
    def passed(self) -> bool:
        limit = 1.0 if self.normalized else self.threshold
        return bool(self.items) and self.max_residual < limit and all(it.passed for it in self.items)

    def failing(self) -> list[str]:
        return [it.name for it in self.items if not it.passed]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "threshold": 1.0 if self.normalized else self.threshold,
            "normalized": self.normalized,
            "pass": self.passed,
            "items": [it.to_dict() for it in self.items],
            "meta": self.meta,
        }


# --------------------------------------------------------------------------
# sampling


def sample_points(rng: np.random.Generator, n: int, box=FLAT_BOX) -> np.ndarray:
    lo = np.array([b[0] for b in box])
    hi = np.array([b[1] for b in box])
    return lo + (hi - lo) * rng.random((n, 3))


def _min_margins(kind: PotentialKind, p: ExactSolutionParams, t_end: float):
    t = np.linspace(0.0, t_end, 2001)
    n = exact_solution(kind, p, t)
    interval = n.x**2 - n.y**2 - n.s**2
    xy = n.x + n.y
    return float(np.min(interval)), float(np.min(xy)), float(np.min(np.abs(xy - 1.0)))


def sample_exact_params(
    rng: np.random.Generator, kind: PotentialKind | int, v0: float, t_end: float, margin: float = 0.25
) -> ExactSolutionParams:
    """Draw exact-solution constants whose trajectory stays inside the chart.

    Along [0, t_end] the interval u^2 stays above ``margin``, x + y stays
    positive and away from 1 (where I2 has a removable 0/0).
    """
    kind = PotentialKind(kind)
    for _ in range(1000):
        s0, s1 = rng.uniform(-1.0, 1.0, 2)
        y0, y1 = rng.uniform(-0.5, 0.5, 2)
        if kind is PotentialKind.I:
            amp = math.hypot(s0, s1)
            x0 = abs(y0) + rng.uniform(0.2, 1.0)
            x1 = abs(y1) + amp + rng.uniform(0.5, 1.5)
        else:
            x0 = abs(y0) + abs(s0) + rng.uniform(0.2, 1.0)
            x1 = abs(y1) + abs(s1) + rng.uniform(0.2, 1.0)
        p = ExactSolutionParams(s0=s0, s1=s1, x0=x0, x1=x1, y0=y0, y1=y1, v0=v0)
        interval, xy, pole = _min_margins(kind, p, t_end)
        if interval > margin and xy > margin and pole > margin:
            return p
    raise RuntimeError("could not draw admissible exact-solution parameters")


def random_initial_state(
    rng: np.random.Generator, spec: PotentialSpec, t_end: float
) -> tuple[FieldState, ExactSolutionParams]:
    p = sample_exact_params(rng, spec.kind, spec.v0, t_end)
    return to_field(exact_solution(spec.kind, p, 0.0)), p


def default_v0(kind: PotentialKind | int) -> float:
    """Default V0 per potential.

    Potential II grows like e^{2 vbar t}; V0 = 0.01 keeps e^{vbar t} < 20 on
    [0, 20] so the integrals are not swamped by cancellation.
    """
    return 0.5 if PotentialKind(kind) is PotentialKind.I else 0.01


# --------------------------------------------------------------------------
# geometry


def verify_flatness(rng: np.random.Generator, samples: int = 1000, threshold: float = 1e-9):
    pts = sample_points(rng, samples)
    worst = max(geo.riemann_norm_at(p) for p in pts)
    return VerificationReport(
        "flatness", samples, [Item("riemann", worst, threshold, samples)], threshold,
        {"box": FLAT_BOX},
    )


def verify_killing_vectors(rng: np.random.Generator, samples: int = 200, threshold: float = 1e-9):
    pts = sample_points(rng, samples)
    items = []
    for vid in geo.KILLING_VECTORS:
        r = max(float(np.max(np.abs(geo.lie_derivative_metric(vid, p)))) for p in pts)
        items.append(Item(vid.value, r, threshold, samples))
    r = max(
        float(np.max(np.abs(geo.lie_derivative_metric(geo.VectorFieldId.HOM, p) - 2.0 * geo.metric_at(p))))
        for p in pts
    )
    items.append(Item("HOM", r, threshold, samples))
    return VerificationReport("killing-vectors", samples, items, threshold, {"box": FLAT_BOX})


def verify_killing_tensors(
    rng: np.random.Generator, samples: int = 100, points: int = 100, threshold: float = 1e-8
):
    """Killing equation, span dimension and the metric slice c11."""
    params = rng.uniform(-1.0, 1.0, (samples, 20))
    pts = sample_points(rng, points, TENSOR_BOX)
    worst = 0.0
    for p in pts:
        B = geo.killing_tensor_basis(p)
        dB = np.stack([geo.killing_tensor_basis(p, d) for d in range(3)], axis=-1)
        G = geo.christoffel_at(p)
        for c in params:
            S = geo.symmetrized_covariant_derivative(B @ c, np.einsum("ijck,c->ijk", dB, c), G)
            worst = max(worst, float(np.max(np.abs(S))))
    # rank: stack the six independent components at 20 generic points
    iu = np.triu_indices(3)
    rows = np.vstack([geo.killing_tensor_basis(p)[iu] for p in sample_points(rng, 20, TENSOR_BOX)])
    sv = np.linalg.svd(rows, compute_uv=False)
    rank = int(np.sum(sv > sv[0] * 1e-10))
    metric_err = max(
        float(np.max(np.abs(geo.killing_tensor_at(geo.KillingTensorParams.unit(11), p) - geo.metric_at(p))))
        for p in pts
    )
    items = [
        Item("killing-equation", worst, threshold, samples * points),
        Item("rank-deficit", float(20 - rank), 0.5, 20),
        Item("metric-slice", metric_err, 1e-12, points),
    ]
    return VerificationReport(
        "killing-tensors", samples * points, items, None, {"rank": rank, "box": TENSOR_BOX}
    )


# --------------------------------------------------------------------------
# dynamics


def verify_conservation(
    rng: np.random.Generator,
    spec: PotentialSpec,
    trajectories: int = 20,
    t_end: float = 20.0,
    tol: float = 1e-12,
    integrals=None,
    threshold: float = 1e-7,
    energy_threshold: float = 1e-9,
):
    ids = applicable_integrals(spec) if integrals is None else [IntegralId(i) for i in integrals]
    drift = {iid: 0.0 for iid in ids}
    e_drift = 0.0
    for _ in range(trajectories):
        s0, _ = random_initial_state(rng, spec, t_end)
        traj = integrate(s0, spec, t_end, tol, integrals=ids)
        for iid in ids:
            drift[iid] = max(drift[iid], conservation_drift(iid, traj, spec))
        e_drift = max(e_drift, traj.energy_drift)
    items = [Item(iid.value, drift[iid], threshold, trajectories) for iid in ids]
    items.append(Item("E", e_drift, energy_threshold, trajectories))
    return VerificationReport(
        "conservation",
        trajectories,
        items,
        None,
        {"potential": spec.kind.value, "v0": spec.v0, "t_end": t_end, "tol": tol},
    )


def _random_field_states(rng: np.random.Generator, n: int) -> FieldState:
    pos = sample_points(rng, n, TENSOR_BOX)
    vel = rng.uniform(-1.0, 1.0, (n, 3))
    return FieldState(np.zeros(n), *pos.T, *vel.T)


def _integrate_normal(n0: NormalState, spec: PotentialSpec, t_eval, tol: float):
    def rhs(t, y):
        acc = normal_eom_rhs(NormalState(t, *y), spec)
        return [y[3], y[4], y[5], *acc]

    sol = solve_ivp(
        rhs, (t_eval[0], t_eval[-1]), n0.as_vector(), method="DOP853", t_eval=t_eval, rtol=tol, atol=tol * 1e-2
    )
    return NormalState(sol.t, *sol.y)


def verify_transform(
    rng: np.random.Generator,
    spec: PotentialSpec,
    samples: int = 1000,
    trajectories: int = 5,
    t_end: float = 10.0,
    tol: float = 1e-12,
):
    f = _random_field_states(rng, samples)
    back = to_field(to_normal(f))
    a = np.array(f[1:])
    b = np.array(back[1:])
    roundtrip = float(np.max(np.abs(a - b) / (1.0 + np.abs(a))))

    n = to_normal(f)
    L_field = lagrangian_eval(f, spec)
    E_field = hamiltonian_eval(f, spec)
    dL = float(np.max(np.abs(L_field - lagrangian_normal_eval(n, spec)) / (1.0 + np.abs(L_field))))
    dE = float(np.max(np.abs(E_field - hamiltonian_normal_eval(n, spec)) / (1.0 + np.abs(E_field))))

    agree = 0.0
    for _ in range(trajectories):
        s0, _ = random_initial_state(rng, spec, t_end)
        traj = integrate(s0, spec, t_end, tol)
        nt = _integrate_normal(to_normal(s0), spec, traj.t, tol)
        mapped = np.array(to_field(nt)[1:]).T
        agree = max(agree, float(np.max(np.abs(traj.y - mapped) / (1.0 + np.abs(mapped)))))

    items = [
        Item("round-trip", roundtrip, 1e-12, samples),
        Item("lagrangian", dL, 1e-10, samples),
        Item("hamiltonian", dE, 1e-10, samples),
        Item("integration", agree, 1e-7, trajectories),
    ]
    return VerificationReport(
        "transform", samples, items, None, {"potential": spec.kind.value, "v0": spec.v0, "t_end": t_end}
    )


def _normal_el_residual(p: ExactSolutionParams, kind: PotentialKind, t: float) -> float:
    spec = PotentialSpec(kind, p.v0)
    vel = lambda tt: np.array(exact_solution(kind, p, tt)[4:])  # noqa: E731
    acc, _ = richardson_derivative(vel, t)
    n = exact_solution(kind, p, t)
    rhs = np.array(normal_eom_rhs(n, spec), dtype=float)
    return float(np.max(np.abs(acc - rhs) / (1.0 + np.abs(rhs))))


def _field_el_residual(p: ExactSolutionParams, kind: PotentialKind, t: float) -> float:
    spec = PotentialSpec(kind, p.v0)
    vel = lambda tt: np.array(to_field(exact_solution(kind, p, tt))[4:])  # noqa: E731
    pos = lambda tt: np.array(to_field(exact_solution(kind, p, tt))[1:4])  # noqa: E731
    acc, _ = richardson_derivative(vel, t)
    dpos, _ = richardson_derivative(pos, t)
    f = to_field(exact_solution(kind, p, t))
    rhs = np.array(eom_rhs(f, spec), dtype=float)
    return max(
        float(np.max(np.abs(acc - rhs) / (1.0 + np.abs(rhs)))),
        float(np.max(np.abs(dpos - np.array(f[4:])) / (1.0 + np.abs(f[4:])))),
    )


def _energy_scale(f: FieldState, spec: PotentialSpec) -> float:
    """1 + sum of the magnitudes of the terms that cancel inside E."""
    kin_u = 0.5 * f.du**2
    kin_fields = 0.5 * f.u**2 * (f.dz**2 + np.exp(2.0 * f.z) * f.dw**2)
    pot = abs(float(hamiltonian_eval(f, spec)) - (kin_fields - kin_u))
    return 1.0 + kin_u + kin_fields + pot


def verify_exact_solutions(
    rng: np.random.Generator, samples: int = 20, t_end: float = 5.0, v0: dict | None = None
):
    """Closed-form solutions against the field equations in both charts."""
    v0 = v0 or {PotentialKind.I: 0.5, PotentialKind.II: 0.5}
    energy_formula = {PotentialKind.I: energy_potential1, PotentialKind.II: energy_potential2}
    items = []
    for kind in PotentialKind:
        el_n = el_f = de = 0.0
        for _ in range(samples):
            p = sample_exact_params(rng, kind, v0[kind], t_end)
            spec = PotentialSpec(kind, p.v0)
            e_ref = energy_formula[kind](p)
            for t in rng.uniform(0.0, t_end, 3):
                el_n = max(el_n, _normal_el_residual(p, kind, t))
                el_f = max(el_f, _field_el_residual(p, kind, t))
                f = to_field(exact_solution(kind, p, t))
                e_num = float(hamiltonian_eval(f, spec))
                de = max(de, abs(e_num - e_ref) / _energy_scale(f, spec))
        tag = f"potential-{kind.value}"
        items += [
            Item(f"{tag}/normal-el", el_n, 1e-10, samples),
            Item(f"{tag}/field-el", el_f, 1e-8, samples),
            Item(f"{tag}/energy", de, 1e-12, samples),
        ]
    return VerificationReport(
        "exact-solutions", 2 * samples, items, None, {"v0": {k.value: x for k, x in v0.items()}}
    )


CHECKS = (
    "flatness",
    "killing-vectors",
    "killing-tensors",
    "conservation",
    "transform",
    "exact-solutions",
)


def run_check(
    name: str,
    rng: np.random.Generator,
    spec: PotentialSpec,
    samples: int | None = None,
    tol: float = 1e-12,
    t_end: float | None = None,
    integrals=None,
) -> VerificationReport:
    """Dispatch by check name with the suite defaults filled in."""
    kw = {} if samples is None else {"samples": samples}
    if name == "flatness":
        return verify_flatness(rng, **kw)
    if name == "killing-vectors":
        return verify_killing_vectors(rng, **kw)
    if name == "killing-tensors":
        return verify_killing_tensors(rng, **kw)
    if name == "conservation":
        return verify_conservation(
            rng,
            spec,
            trajectories=samples or 20,
            t_end=t_end or 20.0,
            tol=tol,
            integrals=integrals,
        )
    if name == "transform":
        return verify_transform(rng, spec, t_end=t_end or 10.0, tol=tol, **kw)
    if name == "exact-solutions":
        return verify_exact_solutions(rng, t_end=t_end or 5.0, **kw)
    raise ValueError(f"unknown check {name!r}")
