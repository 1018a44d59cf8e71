# %% [markdown]
# # The linear model is an ordinary eigenvector problem
#
# With all four maps equal to the identity, node scores are the Perron
# vector of `(A_H + D_H) N` (clique expansion) and edge scores the Perron
# vector of `(A_e + Delta) W` (line graph). This demo builds both matrices
# explicitly and compares them with the iterative solver.

# %%
import numpy as np

from hypercent import SolverOptions, clique_expansion, line_graph_expansion, make_linear, npm_solve, random_hypergraph
from hypercent.oracles import dense_perron, linear_edge_matrix, linear_node_matrix

h = random_hypergraph(9, 7, seed=1, node_weight_range=(0.5, 2.0))
for e, w in zip(h.incidence_by_edge, h.edge_weights):
    print(f"w={w:.3f}  {e}")

# %% [markdown]
# The clique expansion puts weight `sum w(e)` on every pair sharing an
# edge; the diagonal holds the weighted degrees.

# %%
g = clique_expansion(h)
print(np.round(g.dense(), 2))

B = h.B.toarray()
print("matches B W B^T:", np.allclose(g.dense(), B @ np.diag(h.edge_weights) @ B.T))
print("line graph matches B^T N B:", np.allclose(line_graph_expansion(h).dense(), B.T @ np.diag(h.node_weights) @ B))

# %%
sol = npm_solve(h, make_linear(), SolverOptions(tol=1e-13, max_iter=100_000))
x, lam, _ = dense_perron(linear_node_matrix(h))
y, mu, _ = dense_perron(linear_edge_matrix(h))

print(f"solver: {sol.iterations} iterations")
print("max |x - perron| =", np.abs(sol.x - x).max())
print("max |y - perron| =", np.abs(sol.y - y).max())
# both matrices share the eigenvalue lambda * mu of the coupled system
print(f"dense eigenvalues {lam:.6f} {mu:.6f}, solver lambda * mu {sol.lam * sol.mu:.6f}")
