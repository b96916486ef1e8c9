"""Geometry of the (u, w, z) field space.

Run with ``python demos/geometry_tour.py``; every cell prints what it checks.
"""

# %%
import numpy as np

from multiscalar import geometry as geo

p = geo.Point(1.5, 0.3, -0.2)
print("metric diag(-1, u^2 e^{2z}, u^2):")
print(geo.metric_at(p))

# %% [markdown]
# The connection is not zero in this chart, yet every Riemann component
# vanishes: the space is flat, just written in curvilinear coordinates.

# %%
print("nonzero Christoffel symbols:", np.count_nonzero(np.abs(geo.christoffel_at(p)) > 1e-15))
print("max |Riemann|:", geo.riemann_norm_at(p))

# %% [markdown]
# Six Killing vectors (three translations, three boosts/rotations) and one
# homothety with L_X g = 2 g.

# %%
for vid in geo.KILLING_VECTORS:
    print(f"{vid.value}: X = {geo.killing_vector_at(vid, p)}, max |L_X g| = "
          f"{np.max(np.abs(geo.lie_derivative_metric(vid, p))):.1e}")
hom = geo.lie_derivative_metric(geo.VectorFieldId.HOM, p) - 2 * geo.metric_at(p)
print(f"HOM: max |L_X g - 2 g| = {np.max(np.abs(hom)):.1e}")

# %% [markdown]
# Killing tensors: a 20-parameter family. A random combination satisfies
# the symmetrized Killing equation, and the c11 member is the metric itself.

# %%
rng = np.random.default_rng(1)
c = rng.uniform(-1, 1, 20)
print("Killing-equation residual:", geo.killing_residual(c, p))
print("c11 slice equals g:", np.allclose(geo.killing_tensor_at(geo.KillingTensorParams.unit(11), p), geo.metric_at(p)))
