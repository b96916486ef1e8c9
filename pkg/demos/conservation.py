"""Integrate the field equations and watch the quadratic integrals.

Potential I carries six first integrals and potential II carries ten.
"""

# %%
import numpy as np

from multiscalar.dynamics import PotentialKind, PotentialSpec, integrate
from multiscalar.symmetries import applicable_integrals, conservation_drift
from multiscalar.verification import default_v0, random_initial_state

rng = np.random.default_rng(7)

# %%
for kind in PotentialKind:
    spec = PotentialSpec(kind, default_v0(kind))
    ids = applicable_integrals(spec)
    s0, _ = random_initial_state(rng, spec, 20.0)
    traj = integrate(s0, spec, 20.0, 1e-12, integrals=ids)
    print(f"potential {kind.name} (V0 = {spec.v0}), status {traj.status.value}")
    print(f"  energy drift {traj.energy_drift:.1e}")
    for iid in ids:
        print(f"  {iid.value:>5}: drift {conservation_drift(iid, traj, spec):.1e}")

# %% [markdown]
# A state heading straight for u = 0 stops at the singularity instead of
# raising; the trajectory records where it stopped.

# %%
from multiscalar.dynamics import FieldState

crash = integrate(FieldState(0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0), PotentialSpec(1, 0.5), 3.0)
print("status:", crash.status.value, "t_stop:", crash.t[-1])
