# %% [markdown]
# # Leading-order shapes in the four regimes
#
# The formulas are plain functions of `(k, c)`; they do not check whether
# the inputs are actually extreme. The tables show how slowly they close in.

# %%
import math

from ivbounds import implied_y
from ivbounds.asymptotics import asym_price_to_one, asym_price_to_zero, asym_wing

k = 0.2
print("price -> 1")
for m in (2, 4, 8, 14):
    c = 1 - 10.0**-m
    print(f"  1-c=1e-{m:<2d}  Y={implied_y(k, c).y:.6f}  asym={asym_price_to_one(c):.6f}")

print("price -> 0")
for m in (4, 16, 64, 256):
    c = 10.0**-m
    print(f"  c=1e-{m:<3d}  Y={implied_y(k, c).y:.6f}  asym={asym_price_to_zero(k, c):.6f}")

# %% [markdown]
# For the right wing at fixed maturity the Black-Scholes curve itself makes
# a good test: its wing price is known, and the shape tends to `y`.

# %%
from ivbounds import call_price

y = 1.0
for k in (1.0, 4.0, 10.0, 25.0):
    c = call_price(k, y)
    print(f"k={k:5.1f}  c={c:.3e}  Y={implied_y(k, c).y:.6f}  asym={asym_wing(k, c):.6f}")
