# %% [markdown]
# # Wings of two model smiles
#
# Variance gamma has thin right-wing prices; the jump-to-default model puts
# a point mass at zero, so the left-wing put price stays proportional to
# the strike.

# %%
import math

import numpy as np

from ivbounds import implied_y
from ivbounds.asymptotics import asym_fixed_u, asym_wing
from ivbounds.bounds import bracket_gul
from ivbounds.models import JTD_EXAMPLE, VG_CALIBRATED, jtd_put, vg_call, vg_mean

print("E[X] under variance gamma:", vg_mean(VG_CALIBRATED))
for k in np.linspace(0.5, 2.5, 5):
    k = float(k)
    c = vg_call(VG_CALIBRATED, k)
    br = bracket_gul(k, c)
    print(f"k={k:.2f} c={c:.3e} lower={br.lower:.4f} Y={implied_y(k, c).y:.4f} upper={br.upper:.4f} asym={asym_wing(k, c):.4f}")

# %% [markdown]
# Far to the left, `e^-k p(k)` settles on the default probability `u`, and
# the implied value approaches `sqrt(2|k|) + Phi^-1(u)`.

# %%
u = JTD_EXAMPLE.default_probability
for k in (-1.0, -3.5, -10.0, -40.0):
    image = math.exp(-k) * jtd_put(JTD_EXAMPLE, k)
    y = implied_y(-k, image).y  # same value as at (k, c) by put-call symmetry
    print(f"k={k:6.1f}  e^-k p - u = {image - u:.3e}  Y={y:.5f}  asym={asym_fixed_u(k, u):.5f}")
