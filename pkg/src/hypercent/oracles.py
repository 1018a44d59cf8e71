"""Independent reference computations used to check the solver.

Nothing here calls the nonlinear power method; these are dense or
closed-form computations that a solver result can be compared against.
"""
from __future__ import annotations

import numpy as np

from .generators import SunflowerSpec, generate_sunflower
from .hypergraph import Hypergraph, clique_expansion, line_graph_expansion

__all__ = [
    "OracleError",
    "SunflowerSpec",
    "generate_sunflower",
    "sunflower_ratio",
    "dense_perron",
    "linear_node_matrix",
    "linear_edge_matrix",
    "tensor_z_residual",
]


class OracleError(RuntimeError):
    pass


def sunflower_ratio(r: int, beta: float) -> float:
    """Predicted core / petal-node score ratio ``r**beta`` on a uniform sunflower."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return float(r) ** beta


def dense_perron(matrix, tol: float = 1e-12, max_iter: int = 200_000):
    """Dominant eigenpair of a nonnegative irreducible matrix by power iteration.

    Returns ``(v, value, info)`` where ``v`` is positive with unit l2 norm.
    If the iterate starts to alternate between two states, the diagonal
    shift ``max(matrix)`` is added to break the periodicity (eigenvectors are
    unchanged and the reported value is for the unshifted matrix); ``info``
    records the shift actually used.

    Raises
    ------
    OracleError
        If the relative change does not drop below ``tol`` in ``max_iter``
        iterations.
    """
    M = np.asarray(matrix, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if np.any(M < 0):
        raise ValueError("matrix must be entrywise nonnegative")
    n = M.shape[0]
    v = np.full(n, 1.0 / np.sqrt(n))
    shift = 0.0
    prev2 = None
    for it in range(1, max_iter + 1):
        w = M @ v + shift * v
        nw = np.linalg.norm(w)
        if nw == 0:
            raise OracleError("matrix annihilates the iterate; is it irreducible?")
        w /= nw
        change = np.linalg.norm(w - v)
        if change < tol:
            v = w
            break
        if shift == 0.0 and prev2 is not None and np.linalg.norm(w - prev2) < tol and change > 1e3 * tol:
            shift = float(M.max())
        prev2, v = v, w
    else:
        raise OracleError(f"power iteration did not converge in {max_iter} iterations")
    value = float(v @ (M @ v)) / float(v @ v)
    return v, value, {"iterations": it, "shift": shift}


def linear_node_matrix(h: Hypergraph) -> np.ndarray:
    """Dense ``(A_H + D_H) N`` from the clique expansion."""
    return clique_expansion(h).dense() * h.node_weights[None, :]


def linear_edge_matrix(h: Hypergraph) -> np.ndarray:
    """Dense ``(A^(e) + Delta) W`` from the line graph."""
    return line_graph_expansion(h).dense() * h.edge_weights[None, :]


def tensor_z_residual(h: Hypergraph, x, p: float = 1.0) -> float:
    """How far ``x`` is from an l^p eigenvector of the adjacency tensor.

    For a k-uniform hypergraph with unit node weights this evaluates
    ``s_i = sum_{e ∋ i} w(e) prod_{j ∈ e, j != i} x_j`` edge by edge and
    returns ``min_t ||s - t x^p|| / ||s||``.
    """
    sizes = h.edge_sizes
    if not np.all(sizes == sizes[0]):
        raise ValueError("tensor residual needs a uniform hypergraph")
    if not np.all(h.node_weights == 1):
        raise ValueError("tensor residual needs unit node weights")
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"expected a node vector of length {h.n}")
    s = np.zeros(h.n)
    for e, w in zip(h.incidence_by_edge, h.edge_weights):
        for i in e:
            prod = 1.0
            for j in e:
                if j != i:
                    prod *= x[j]
            s[i] += w * prod
    xp = x ** p
    t = float(s @ xp) / float(xp @ xp)
    return float(np.linalg.norm(s - t * xp) / np.linalg.norm(s))
