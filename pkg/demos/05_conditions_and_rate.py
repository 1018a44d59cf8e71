# %% [markdown]
# # Convergence conditions and the observed rate
#
# Each map is homogeneous of some degree. The product
# `rho = |deg f * deg g * deg phi * deg psi|` decides the guarantee:
# `rho < 1` always converges (regime P1); `rho = 1` needs a connected
# incidence graph (regime P2). Log and exp are not homogeneous, so log-exp
# comes without a guarantee.

# %%
import math

import numpy as np

from hypercent import (
    CentralityModel,
    NonlinearMap,
    SolverOptions,
    build_hypergraph,
    check_conditions,
    contraction_factor,
    make_linear,
    make_logexp,
    make_max,
    npm_solve,
    random_hypergraph,
)

ident = NonlinearMap.identity()
half = CentralityModel(ident, ident, ident, NonlinearMap.power(0.5), name="psi=sqrt")
connected = random_hypergraph(8, 6, seed=0)
split = build_hypergraph([((0, 1), 1), ((2, 3), 1)])

for model in (make_linear(), make_max(10), make_logexp(1), half):
    print(f"{model.name:9s} connected: {check_conditions(connected, model)}   split: {check_conditions(split, model)}")

# %% [markdown]
# The update is a geometric mean of the old iterate and the new image. Its
# homogeneity matrix is therefore `(M + I) / 2`, whose spectral radius is at
# least one half and, for `rho = 1/2`, at most `(1 + sqrt(1/2)) / 2`. The
# fitted contraction factors below land in that window.

# %%
factors = []
for seed in range(10):
    h = random_hypergraph(10, 8, seed, node_weight_range=(0.5, 2.0))
    sol = npm_solve(h, half, SolverOptions(tol=1e-13, max_iter=10_000))
    factors.append(contraction_factor(sol))
print("contraction factors:", np.round(factors, 3))
print(f"window [0.5, {(1 + math.sqrt(0.5)) / 2:.3f}]")
