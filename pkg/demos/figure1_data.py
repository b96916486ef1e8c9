"""Scale factor, Hubble rate, deceleration and w_eff for potential I.

Writes one CSV per panel next to this script (no plotting).
"""

# %%
from pathlib import Path

import numpy as np

from multiscalar.cli import FIGURE1_PANELS, figure1_series

out = Path(__file__).with_name("figure1")
out.mkdir(exist_ok=True)

# %%
for panel in sorted(FIGURE1_PANELS):
    t, value, meta = figure1_series(panel)
    np.savetxt(out / f"panel_{panel}.csv", np.column_stack([t, value]), delimiter=",",
               header="t,value", comments="", fmt="%.17g")
    print(f"panel {panel}: {meta['quantity']} in [{value.min():.4f}, {value.max():.4f}]",
          f"defaulted {meta['defaulted'] or '-'}")

# %% [markdown]
# The deceleration parameter swings between roughly -1/4 and 2. w_eff for
# panel d keeps oscillating around zero rather than settling at -1.

# %%
t, w, _ = figure1_series("d")
late = t >= 40
print("late-time w_eff mean:", w[late].mean(), "range:", w[late].min(), w[late].max())
