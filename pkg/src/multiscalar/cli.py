"""Command-line front end.

    multiscalar verify killing-tensors --samples 100 --seed 42
    multiscalar verify conservation --potential 1 --v0 0.5
    multiscalar integrate --potential 2 --state 1,0.1,0,0.3,0,0.1 --t-end 5 --out run.csv
    multiscalar exact --potential 1 --param s0=1 --param x1=2 --out exact.csv
    multiscalar observables --potential 2 --param x0=1 --param x1=-1 --out obs.csv
    multiscalar figure1 --panel c --out q.csv

Exit status: 0 success / verification passed, 1 verification failed,
2 invalid configuration (including an integral that is not conserved for
the chosen potential).  Numbers are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .dynamics import FieldState, IntegrationStatus, PotentialKind, PotentialSpec, integrate
from .errors import DomainError, InapplicableIntegralError
from .solutions import (
    ExactSolutionParams,
    energy_potential1,
    energy_potential2,
    exact_solution,
    observables_potential1,
    observables_potential2,
)
from .symmetries import IntegralId, applicable_integrals
from .verification import CHECKS, default_v0, random_initial_state, run_check

__all__ = ["main", "build_parser", "load_config", "FIGURE1_PANELS"]

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

PARAM_KEYS = ("s0", "s1", "x0", "x1", "y0", "y1")

#: panel -> (quantity, given parameters); anything missing comes from panel a
FIGURE1_PANELS = {
    "a": ("a", {"s0": 1.0, "vbar": 0.5}),
    "b": ("H", {"vbar": 0.470}),
    "c": ("q", {"s0": 1.0, "vbar": 0.5}),
    "d": ("w_eff", {"vbar": 1.0, "s0": math.sqrt(3.0), "x0": 2.0, "y0": 1.0}),
}
FIGURE1_T_MAX = 50.0
FIGURE1_DT = 1e-3


class ConfigError(ValueError):
    pass


def fmt(x) -> str:
    return format(float(x), ".17g")


# --------------------------------------------------------------------------
# configuration


def load_config(path: str | Path) -> dict:
    """Flat ``key=value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _parse_param_list(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise ConfigError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


class RunConfig(dict):
    """Merged settings: built-in defaults < config file < command line."""

    def get_float(self, key, default=None):
        v = self.get(key, default)
        if v is None:
            return None
        try:
            return float(v)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be a number, got {v!r}") from None

    def get_int(self, key, default=None):
        v = self.get(key, default)
        if v is None:
            return None
        try:
            return int(v)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {v!r}") from None


def _merge(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(seed=42, potential=1, tol=1e-12)
    if args.config:
        try:
            cfg.update(load_config(args.config))
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    for key, value in vars(args).items():
        if key in ("config", "param", "func") or value is None:
            continue
        cfg[key] = value
    cfg.update(_parse_param_list(getattr(args, "param", None)))
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig):
    if cfg.get_int("potential") not in (1, 2):
        raise ConfigError("potential must be 1 or 2")
    if not cfg.get_float("tol") > 0.0:
        raise ConfigError("tol must be positive")
    t_end = cfg.get_float("t_end")
    if t_end is not None and not t_end > 0.0:
        raise ConfigError("t_end must be positive")
    v0 = cfg.get_float("v0")
    if v0 is not None and not (math.isfinite(v0) and v0 > 0.0):
        raise ConfigError("v0 must be positive")
    samples = cfg.get_int("samples")
    if samples is not None and samples < 1:
        raise ConfigError("samples must be at least 1")
    cfg.get_int("seed")


def _spec(cfg: RunConfig) -> PotentialSpec:
    kind = PotentialKind(cfg.get_int("potential"))
    v0 = cfg.get_float("v0")
    return PotentialSpec(kind, default_v0(kind) if v0 is None else v0)


def _integral_ids(cfg: RunConfig, spec: PotentialSpec):
    raw = cfg.get("integral")
    if raw is None:
        return None
    names = raw if isinstance(raw, list) else [raw]
    ids = []
    for chunk in names:
        for name in str(chunk).split(","):
            name = name.strip()
            if not name:
                continue
            try:
                iid = IntegralId(name)
            except ValueError:
                raise ConfigError(f"unknown integral {name!r}") from None
            if iid not in applicable_integrals(spec):
                raise InapplicableIntegralError(
                    f"{iid.value} is not a first integral for potential {spec.kind.value}"
                )
            ids.append(iid)
    return ids


def _exact_params(cfg: RunConfig, spec: PotentialSpec) -> ExactSolutionParams:
    vals = {k: cfg.get_float(k, 0.0) for k in PARAM_KEYS}
    return ExactSolutionParams(v0=spec.v0, **vals)


# --------------------------------------------------------------------------
# output helpers


class _Sink:
    def __init__(self, path):
        self.path = None if path in (None, "-") else Path(path)

    def __enter__(self):
        if self.path is None:
            self.fh = sys.stdout
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.fh = self.path.open("w", newline="\n")
        return self.fh

    def __exit__(self, *exc):
        if self.path is not None:
            self.fh.close()


def _write_csv(path, header, columns):
    with _Sink(path) as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(fmt(v) for v in row) + "\n")


def _json_default(obj):
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _dump_json(payload, path):
    text = json.dumps(payload, indent=2, default=_json_default) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)


def _sidecar(out) -> str | None:
    return None if out in (None, "-") else str(out) + ".json"


def _grid(t_end: float, dt: float) -> np.ndarray:
    n = int(math.floor(t_end / dt + 1e-9))
    return np.round(dt * np.arange(n + 1), 12)


# --------------------------------------------------------------------------
# commands


def cmd_verify(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    ids = _integral_ids(cfg, spec)
    if ids is not None and cfg["check"] != "conservation":
        raise ConfigError("--integral only applies to the conservation check")
    rng = np.random.default_rng(cfg.get_int("seed"))
    report = run_check(
        cfg["check"],
        rng,
        spec,
        samples=cfg.get_int("samples"),
        tol=cfg.get_float("tol"),
        t_end=cfg.get_float("t_end"),
        integrals=ids,
    )
    payload = report.to_dict()
    payload["seed"] = cfg.get_int("seed")
    _dump_json(payload, cfg.get("out"))
    if not report.passed:
        print(f"{report.check}: FAIL ({', '.join(report.failing()) or 'no items'})", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _initial_state(cfg: RunConfig, spec: PotentialSpec, t_end: float) -> tuple[FieldState, str]:
    raw = cfg.get("state")
    if raw is None:
        rng = np.random.default_rng(cfg.get_int("seed"))
        s0, _ = random_initial_state(rng, spec, t_end)
        return s0, "random"
    try:
        vals = [float(v) for v in str(raw).split(",")]
    except ValueError:
        raise ConfigError(f"state must be six comma-separated numbers, got {raw!r}") from None
    if len(vals) != 6:
        raise ConfigError("state must have six entries: u,w,z,u_dot,w_dot,z_dot")
    if not vals[0] > 0.0:
        raise ConfigError("initial u must be positive")
    return FieldState(0.0, *vals), "given"


def cmd_integrate(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    ids = _integral_ids(cfg, spec) or []
    t_end = cfg.get_float("t_end", 10.0)
    s0, origin = _initial_state(cfg, spec, t_end)
    dt_out = cfg.get_float("dt_out", t_end / 1000.0)
    if not dt_out > 0.0:
        raise ConfigError("dt_out must be positive")
    traj = integrate(s0, spec, t_end, cfg.get_float("tol"), dt_out=dt_out, integrals=ids)

    header = ["t", "u", "w", "z", "u_dot", "w_dot", "z_dot", "E"] + [i.value for i in ids]
    cols = [traj.t, *traj.y.T, traj.energy] + [traj.charges[i] for i in ids]
    _write_csv(cfg.get("out"), header, cols)

    meta = {
        "status": traj.status.value,
        "t_stop": traj.t_stop,
        "rows": len(traj),
        "nfev": traj.nfev,
        "rtol": traj.rtol,
        "atol": traj.atol,
        "potential": spec.kind.value,
        "v0": spec.v0,
        "initial_state": list(s0[1:]),
        "initial_state_origin": origin,
        "seed": cfg.get_int("seed"),
        "energy_drift": traj.energy_drift if len(traj) else None,
    }
    side = _sidecar(cfg.get("out"))
    if side is not None:
        _dump_json(meta, side)
    elif traj.status is not IntegrationStatus.COMPLETED:
        print(json.dumps(meta, default=_json_default), file=sys.stderr)
    return EXIT_OK


def cmd_exact(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    p = _exact_params(cfg, spec)
    t = _grid(cfg.get_float("t_end", 10.0), cfg.get_float("dt", 0.01))
    n = exact_solution(spec.kind, p, t)
    a3 = 0.375 * (n.x**2 - n.y**2 - n.s**2)
    header = ["t", "x", "y", "s", "x_dot", "y_dot", "s_dot", "a3"]
    _write_csv(cfg.get("out"), header, [*n, a3])
    energy = energy_potential1(p) if spec.kind is PotentialKind.I else energy_potential2(p)
    side = _sidecar(cfg.get("out"))
    if side is not None:
        _dump_json({"potential": spec.kind.value, "v0": spec.v0, "vbar": p.vbar, "E": energy,
                    "params": {k: getattr(p, k) for k in PARAM_KEYS}}, side)
    return EXIT_OK


def _q_check(obs) -> np.ndarray:
    # q = -1 - H_dot/H^2 and w_eff = -1 - (2/3) H_dot/H^2, so q = (3 w_eff + 1) / 2
    return 0.5 * (3.0 * np.asarray(obs.w_eff) + 1.0)


def cmd_observables(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    t_end = cfg.get_float("t_end", 10.0)
    dt = cfg.get_float("dt", 0.01)
    t = _grid(t_end, dt)[1:]
    if spec.kind is PotentialKind.I:
        s0 = cfg.get_float("s0", 1.0)
        p = ExactSolutionParams.reduced(s0, spec.vbar, cfg.get_float("x0"), cfg.get_float("y0"))
        obs = observables_potential1(p, t)
    else:
        p = _exact_params(cfg, spec)
        obs = observables_potential2(p, t)
    q_check = _q_check(obs)
    _write_csv(cfg.get("out"), ["t", "a", "H", "q", "q_check", "w_eff"], [obs.t, obs.a, obs.H, obs.q, q_check, obs.w_eff])
    gap = float(np.max(np.abs(obs.q - q_check)))
    side = _sidecar(cfg.get("out"))
    meta = {
        "potential": spec.kind.value,
        "params": {k: getattr(p, k) for k in PARAM_KEYS},
        "vbar": p.vbar,
        "max_q_discrepancy": gap,
        "q_transcription_suspect": gap > 1e-4,
    }
    if side is not None:
        _dump_json(meta, side)
    return EXIT_OK


def figure1_series(panel: str):
    """(t, value, metadata) for one panel of the scale-factor figure."""
    if panel not in FIGURE1_PANELS:
        raise ConfigError(f"panel must be one of {sorted(FIGURE1_PANELS)}")
    quantity, given = FIGURE1_PANELS[panel]
    used = dict(given)
    defaulted = []
    for key in ("s0", "vbar"):
        if key not in used:
            used[key] = FIGURE1_PANELS["a"][1][key]
            defaulted.append(key)
    p = ExactSolutionParams.reduced(used["s0"], used["vbar"], used.get("x0"), used.get("y0"))
    for key in ("x0", "y0"):
        if key not in used:
            used[key] = getattr(p, key)
            defaulted.append(key)
    t = _grid(FIGURE1_T_MAX, FIGURE1_DT)[1:]
    obs = observables_potential1(p, t)
    value = {"a": obs.a, "H": obs.H, "q": obs.q, "w_eff": obs.w_eff}[quantity]
    meta = {
        "panel": panel,
        "quantity": quantity,
        "parameters": used,
        "defaulted": defaulted,
        "t_min": float(t[0]),
        "t_max": float(t[-1]),
        "dt": FIGURE1_DT,
        "rows": int(t.size),
    }
    return t, value, meta


def cmd_figure1(cfg: RunConfig) -> int:
    t, value, meta = figure1_series(str(cfg.get("panel")))
    _write_csv(cfg.get("out"), ["t", "value"], [t, value])
    side = _sidecar(cfg.get("out"))
    if side is not None:
        _dump_json(meta, side)
    elif meta["defaulted"]:
        print(f"defaulted parameters: {', '.join(meta['defaulted'])}", file=sys.stderr)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--potential", type=int, choices=(1, 2))
    shared.add_argument("--v0", type=float)
    shared.add_argument("--tol", type=float)
    shared.add_argument("--t-end", dest="t_end", type=float)
    shared.add_argument("--seed", type=int)
    shared.add_argument("--out")
    shared.add_argument("--config")

    parser = argparse.ArgumentParser(prog="multiscalar", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("--samples", type=int)
    p.add_argument("--integral", action="append")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integrate", parents=[shared], help="integrate the field equations")
    p.add_argument("--state", help="u,w,z,u_dot,w_dot,z_dot (random from --seed if omitted)")
    p.add_argument("--dt-out", dest="dt_out", type=float)
    p.add_argument("--integral", action="append")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("exact", parents=[shared], help="sample a closed-form solution")
    p.add_argument("--param", action="append", help="s0, s1, x0, x1, y0 or y1 as key=value")
    p.add_argument("--dt", type=float)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("observables", parents=[shared], help="a, H, q and w_eff along a closed-form solution")
    p.add_argument("--param", action="append", help="s0, s1, x0, x1, y0 or y1 as key=value")
    p.add_argument("--dt", type=float)
    p.set_defaults(func=cmd_observables)

    p = sub.add_parser("figure1", parents=[shared], help="data for one panel of the scale-factor figure")
    p.add_argument("--panel", choices=sorted(FIGURE1_PANELS), required=True)
    p.set_defaults(func=cmd_figure1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        cfg = _merge(args)
        return args.func(cfg)
    except (ConfigError, InapplicableIntegralError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
