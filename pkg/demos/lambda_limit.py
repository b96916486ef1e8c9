"""Potential II with x1 = -x0, y1 = -y0, s1 = -s0 behaves like matter plus Lambda."""

# %%
import numpy as np

from multiscalar.solutions import (
    ExactSolutionParams,
    lambda_cosmology_scale_factor_cubed,
    lambda_identification,
    lambda_special_case,
    lambda_special_case_quarter_e,
    observables_potential2,
    potential2_solution,
    scale_factor_cubed_potential2,
)
from multiscalar.transforms import to_field

p = ExactSolutionParams(s0=0.3, s1=-0.3, x0=2.0, x1=-2.0, y0=0.5, y1=-0.5, v0=0.5)
t = np.linspace(0.0, 5.0, 6)

# %%
general = scale_factor_cubed_potential2(p, t)
print("general law      :", general)
print("sinh^2 amplitude :", lambda_special_case(p, t))
print("E/(4 V0) variant :", lambda_special_case_quarter_e(p, t), "(factor -1/4 off)")

# %%
lp = lambda_identification(p)
print(f"Omega_m0 = {lp.omega_m0:.4f}, H0 = {lp.h0:.4f}")
print("Lambda-CDM a^3 :", lambda_cosmology_scale_factor_cubed(lp, t))

# %%
f = to_field(potential2_solution(p, t[1:]))
print("w along the solution:", f.w)
print("z along the solution:", f.z)
obs = observables_potential2(p, t[1:])
print("w_eff:", obs.w_eff, "-> -1 + sech^2(vbar t)")
