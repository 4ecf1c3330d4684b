# %% [markdown]
# # The fixed-point iteration
#
# `F(y) = H1(-k/y + y/2; k, c)` has the implied value as its unique fixed
# point. From the first step on the iterates decrease, each one an upper
# bound, and the error roughly squares every step.

# %%
from ivbounds import implied_y
from ivbounds.bounds import upper_cto1
from ivbounds.solver import fixed_point, fixed_point_map

k, c = 0.2, 0.3
y_star = implied_y(k, c).y
rep = fixed_point(k, c, upper_cto1(k, c))
prev = None
for n, y in enumerate(rep.trace):
    err = y - y_star
    ratio = "" if prev is None or prev == 0 else f"  err/prev^2={err / prev**2:.4f}"
    print(f"y_{n} = {y:.16f}  err={err:.3e}{ratio}")
    prev = err

predicted = (k / y_star + y_star / 2) ** 2 / (2 * y_star)
print(f"predicted limiting ratio {predicted:.4f}")

# %% [markdown]
# Cobweb data: pairs `(y_n, F(y_n))` are what `ivbounds figure --name cobweb`
# writes out.

# %%
from ivbounds.figures import figure_cobweb, to_csv

print(to_csv(*figure_cobweb()))
print(fixed_point_map(y_star, k, c) - y_star)
