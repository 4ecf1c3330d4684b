# %% [markdown]
# # Pricing and inverting in normalized coordinates
#
# Everything works with log-moneyness `k = log(K/F)` and total standard
# deviation `y = sigma * sqrt(T)`; prices are divided by the discounted
# forward, so a call lives in `[(1 - e^k)^+, 1)`.

# %%
import math

from ivbounds import call_price, implied_y, put_price, vega
from ivbounds.solver import SolverConfig

k, y = 0.2, 1.0
c = call_price(k, y)
print(f"C({k}, {y}) = {c:.17g}")
print(f"P({k}, {y}) = {put_price(k, y):.17g}")
print(f"vega       = {vega(k, y):.17g}")

# %% [markdown]
# Inversion returns a report rather than a bare number: the root, the
# iteration count, the price residual and the bracket it started from.

# %%
for method in ("bisection", "newton", "fixed-point"):
    rep = implied_y(k, c, SolverConfig(method=method))
    print(f"{method:12s} y={rep.y:.15f} iters={rep.iterations:3d} residual={rep.residual:.1e}")

# %% [markdown]
# At the money there is a closed form, and the boundary price returns zero
# without iterating.

# %%
print(implied_y(0.0, 0.5))
print(implied_y(-0.3, 1 - math.exp(-0.3)).y)

# %% [markdown]
# Tiny prices keep their relative accuracy: far out of the money the call
# is computed from Mills ratios, not as a difference of two tails.

# %%
for k in (5.0, 20.0, 30.0):
    c = call_price(k, 1.0)
    print(f"k={k:4.0f}  C={c:.6e}  Y={implied_y(k, c).y:.15f}")
