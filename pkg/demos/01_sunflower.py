# %% [markdown]
# # Sunflowers: how the choice of maps changes who is central
#
# A sunflower is a hypergraph whose edges (petals) all share one core node
# and nothing else. It is small enough to reason about by hand, which makes
# it a good first look at the three shipped models.

# %%
import math

import numpy as np

from hypercent import (
    SolverError,
    SolverOptions,
    generate_sunflower,
    make_linear,
    make_logexp,
    make_max,
    npm_solve,
    petal_node_groups,
)
from hypercent.oracles import sunflower_ratio

models = {"linear": make_linear(), "logexp": make_logexp(1), "max": make_max(10)}
opts = SolverOptions(tol=1e-12, max_iter=10_000)

# %% [markdown]
# ## Uniform petals
#
# Eight petals of three nodes. By symmetry all petal nodes get the same
# score, so the only number that matters is core / petal. For homogeneous
# maps this ratio is `r**beta` with `beta = 1` (linear, max) and
# `beta = 1/2` for log-exp with `p = 1`.

# %%
h = generate_sunflower([3] * 8)
print(f"n={h.n} m={h.m}")
for name, beta in [("linear", 1.0), ("logexp", 0.5), ("max", 1.0)]:
    sol = npm_solve(h, models[name], opts)
    print(f"{name:7s} core/petal = {sol.x[0] / sol.x[1]:.10f}   predicted {sunflower_ratio(8, beta):.10f}   "
          f"({sol.iterations} iterations)")

# %% [markdown]
# ## Petals of different sizes
#
# Now one petal of each size from 3 to 10 (45 nodes). Each model rewards
# petal size differently.

# %%
sizes = range(3, 11)
h = generate_sunflower(sizes)
groups = petal_node_groups(sizes)
print(f"n={h.n} m={h.m}")

for name in ("linear", "max"):
    sol = npm_solve(h, models[name], opts)
    per_petal = [sol.x[g].mean() for g in groups]
    print(f"{name:7s} core {sol.x[0]:.4f}  petals by size:", np.round(per_petal, 4))

# %% [markdown]
# Linear scores grow with petal size: a big petal sums more neighbours. The
# max model behaves like a maximum over each edge, so every petal node just
# sees the core and they all tie.
#
# Log-exp is different. At a positive fixed point each petal of size `k`
# would need `a**(k - 2)` to equal one shared constant, and the size-2 case
# is missing here, so no positive solution exists. The iteration still
# shows the trend before it collapses: smaller petals score higher.

# %%
for r in (2, 4, 8):
    sol = npm_solve(h, models["logexp"], SolverOptions(tol=1e-12, max_iter=r))
    print(f"logexp after {r} steps: core {sol.x[0]:.4f}  petals", np.round([sol.x[g].mean() for g in groups], 4))

try:
    npm_solve(h, models["logexp"], opts)
except SolverError as err:
    print("full run:", err)
