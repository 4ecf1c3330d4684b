# %% [markdown]
# # Put-call and close-far symmetry
#
# Put-call symmetry maps `(k, c)` to `(-k, e^-k c + 1 - e^-k)` with the same
# implied y, so negative strikes reduce to positive ones. The close-far map
# pairs a price at total standard deviation `y` with the price at `2k/y`.

# %%
from ivbounds import call_price, implied_y
from ivbounds.symmetry import c_hat, j_integral, put_call_transform

k, y = -0.7, 0.9
c = call_price(k, y)
img = put_call_transform(k, c)
print(img, implied_y(*img).y)

# %%
k = 0.2
for c in (0.05, 0.3, call_price(k, (2 * k) ** 0.5), 0.8):
    h = c_hat(k, c)
    print(f"c={c:.6f}  c_hat={h:.6f}  back={c_hat(k, h):.6f}  Y*Y_hat={implied_y(k, c).y * implied_y(k, h).y:.12f}")

# %% [markdown]
# The integral `J(k, c)` of `1/Y` over prices splits across the pair:
# `J(c) + J(c_hat) = J(1)`, where `J(1)` is a modified Bessel function.

# %%
import math

from scipy.special import k0

total = j_integral(k, 1.0)
print(total, math.exp(k / 2) * k0(k / 2) / math.sqrt(2 * math.pi))
for c in (0.1, 0.5, 0.9):
    print(c, j_integral(k, c) + j_integral(k, c_hat(k, c)) - total)
