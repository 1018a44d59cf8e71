"""Weighted hypergraphs stored as a sparse node-edge incidence matrix.

The incidence matrix ``B`` is kept twice, once in CSR form with node rows and
once in CSR form with edge rows, so that both ``B @ y`` and ``B.T @ x`` are
row-oriented sparse products.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.sparse as sp


class HypergraphError(ValueError):
    """Raised for structurally invalid hypergraph input."""


class Hypergraph:
    """Immutable weighted hypergraph on nodes ``0..n-1`` and edges ``0..m-1``.

    Parameters
    ----------
    edges : sequence of sequences of int
        Member node ids of each edge. Must be sorted and duplicate free;
        use :func:`build_hypergraph` for raw input.
    edge_weights : array_like, shape (m,)
    node_weights : array_like, shape (n,)
    n : int, optional
        Number of nodes. Defaults to one more than the largest member id.
    """

    def __init__(self, edges, edge_weights, node_weights=None, n=None):
        edges = tuple(tuple(int(i) for i in e) for e in edges)
        if not edges:
            raise HypergraphError("a hypergraph needs at least one edge")
        for k, e in enumerate(edges):
            if not e:
                raise HypergraphError(f"edge {k} is empty")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise HypergraphError(f"edge {k} members must be strictly increasing")
            if e[0] < 0:
                raise HypergraphError(f"edge {k} has a negative node id")
        top = max(e[-1] for e in edges) + 1
        if n is None:
            n = top
        elif n < top:
            raise HypergraphError(f"n={n} but node id {top - 1} is used")
        m = len(edges)

        w = np.asarray(edge_weights, dtype=float).copy()
        nu = np.ones(n) if node_weights is None else np.asarray(node_weights, dtype=float).copy()
        if w.shape != (m,):
            raise HypergraphError(f"expected {m} edge weights, got shape {w.shape}")
        if nu.shape != (n,):
            raise HypergraphError(f"expected {n} node weights, got shape {nu.shape}")
        for name, arr in (("edge", w), ("node", nu)):
            bad = np.flatnonzero(~(np.isfinite(arr) & (arr > 0)))
            if bad.size:
                raise HypergraphError(f"{name} weight {bad[0]} is not a positive finite number")
        w.flags.writeable = False
        nu.flags.writeable = False

        indptr = np.zeros(m + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(e) for e in edges])
        indices = np.fromiter((i for e in edges for i in e), dtype=np.int64, count=indptr[-1])
        data = np.ones(indptr[-1])
        # edge-major: rows are edges, so this is B^T
        self._Bt = sp.csr_matrix((data, indices, indptr), shape=(m, n))
        self._B = self._Bt.T.tocsr()
        self._B.sort_indices()

        self.n = int(n)
        self.m = m
        self.incidence_by_edge = edges
        ptr, idx = self._B.indptr, self._B.indices
        self.incidence_by_node = tuple(
            tuple(int(e) for e in idx[ptr[i]:ptr[i + 1]]) for i in range(self.n)
        )
        self.edge_weights = w
        self.node_weights = nu

    # -- basic structure -------------------------------------------------

    @property
    def B(self) -> sp.csr_matrix:
        """The n x m binary incidence matrix (a copy)."""
        return self._B.copy()

    @property
    def edge_sizes(self) -> np.ndarray:
        return np.diff(self._Bt.indptr)

    @property
    def node_degrees(self) -> np.ndarray:
        """Number of edges containing each node (unweighted)."""
        return np.diff(self._B.indptr)

    def weighted_degrees(self) -> np.ndarray:
        """d_i = sum of w(e) over edges containing node i."""
        return self._B @ self.edge_weights

    def is_uniform(self) -> bool:
        sizes = self.edge_sizes
        return bool(np.all(sizes == sizes[0]))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.incidence_by_edge == other.incidence_by_edge
            and np.array_equal(self.edge_weights, other.edge_weights)
            and np.array_equal(self.node_weights, other.node_weights)
        )

    __hash__ = None

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.incidence_by_edge],
            "edge_weights": self.edge_weights.tolist(),
            "node_weights": self.node_weights.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Hypergraph":
        return cls(data["edges"], data["edge_weights"], data["node_weights"], n=data["n"])


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric weighted graph with zero diagonal plus a degree vector.

    ``adjacency`` is a CSR matrix; ``degrees`` holds the diagonal that turns
    it into the corresponding Gram matrix of the incidence structure.
    """

    n: int
    adjacency: sp.csr_matrix
    degrees: np.ndarray

    def dense(self) -> np.ndarray:
        """Dense ``adjacency + diag(degrees)``."""
        return self.adjacency.toarray() + np.diag(self.degrees)


def build_hypergraph(
    edges: Iterable[tuple[Iterable[int], float]],
    node_weights: Optional[Sequence[float]] = None,
    n: Optional[int] = None,
) -> Hypergraph:
    """Build a hypergraph from ``(members, weight)`` pairs.

    Duplicate node ids inside an edge are dropped. Edges with the same member
    set are merged into one edge whose weight is the sum of the weights; the
    merged edge keeps the position of its first occurrence.

    Examples
    --------
    >>> h = build_hypergraph([({0, 1, 2}, 1), ((2, 1, 0), 1)])
    >>> h.m, h.edge_weights.tolist()
    (1, [2.0])
    """
    index: dict[tuple[int, ...], int] = {}
    members: list[tuple[int, ...]] = []
    weights: list[float] = []
    for k, (nodes, weight) in enumerate(edges):
        key = tuple(sorted({int(i) for i in nodes}))
        if not key:
            raise HypergraphError(f"edge {k} is empty")
        if key[0] < 0:
            raise HypergraphError(f"edge {k} has a negative node id")
        weight = float(weight)
        if not (np.isfinite(weight) and weight > 0):
            raise HypergraphError(f"edge {k} has non-positive weight {weight}")
        j = index.get(key)
        if j is None:
            index[key] = len(members)
            members.append(key)
            weights.append(weight)
        else:
            weights[j] += weight
    if not members:
        raise HypergraphError("edge list is empty")
    if n is None and node_weights is not None:
        n = len(node_weights)
    return Hypergraph(members, weights, node_weights, n=n)


def _check_length(v, size, what):
    v = np.asarray(v, dtype=float)
    if v.shape != (size,):
        raise ValueError(f"expected a {what} vector of length {size}, got shape {v.shape}")
    return v


def apply_BW(h: Hypergraph, y) -> np.ndarray:
    """Node vector ``(B W y)_i = sum_{e ∋ i} w(e) y_e``."""
    y = _check_length(y, h.m, "edge")
    return h._B @ (h.edge_weights * y)


def apply_BtN(h: Hypergraph, x) -> np.ndarray:
    """Edge vector ``(B^T N x)_e = sum_{i ∈ e} nu(i) x_i``."""
    x = _check_length(x, h.n, "node")
    return h._Bt @ (h.node_weights * x)


def _split_gram(G: sp.spmatrix, n: int) -> WeightedGraph:
    G = sp.csr_matrix(G)
    diag = G.diagonal().copy()
    A = (G - sp.diags(diag)).tocsr()
    A.eliminate_zeros()
    A.sort_indices()
    return WeightedGraph(n, A, diag)


def clique_expansion(h: Hypergraph) -> WeightedGraph:
    """Clique-expansion graph: pair weight is the total weight of shared edges.

    The returned degrees are the weighted node degrees, so that
    ``adjacency + diag(degrees) == B W B^T``.
    """
    # build pairwise sums edge by edge instead of forming B W B^T, so the
    # identity with the Gram matrix stays an independent check
    rows, cols, vals = [], [], []
    for e, w in zip(h.incidence_by_edge, h.edge_weights):
        for a in e:
            for b in e:
                if a != b:
                    rows.append(a)
                    cols.append(b)
                    vals.append(w)
    A = sp.coo_matrix((vals, (rows, cols)), shape=(h.n, h.n)).tocsr()
    A.sort_indices()
    return WeightedGraph(h.n, A, h.weighted_degrees())


def line_graph_expansion(h: Hypergraph) -> WeightedGraph:
    """Line graph of the hypergraph with node-weighted overlaps.

    Two edges are joined with weight equal to the summed node weights of the
    nodes they share; degrees are ``delta_e = sum_{i ∈ e} nu(i)``.
    """
    rows, cols, vals = [], [], []
    for i, inc in enumerate(h.incidence_by_node):
        nu = h.node_weights[i]
        for a in inc:
            for b in inc:
                if a != b:
                    rows.append(a)
                    cols.append(b)
                    vals.append(nu)
    A = sp.coo_matrix((vals, (rows, cols)), shape=(h.m, h.m)).tocsr()
    A.sort_indices()
    delta = h._Bt @ h.node_weights
    return WeightedGraph(h.m, A, delta)


def bipartite_connected(h: Hypergraph) -> bool:
    """True if the node-edge incidence graph is connected.

    Isolated nodes make the incidence graph disconnected.
    """
    seen_nodes = np.zeros(h.n, dtype=bool)
    seen_edges = np.zeros(h.m, dtype=bool)
    seen_edges[0] = True
    queue = deque([0])
    while queue:
        e = queue.popleft()
        for i in h.incidence_by_edge[e]:
            if seen_nodes[i]:
                continue
            seen_nodes[i] = True
            for f in h.incidence_by_node[i]:
                if not seen_edges[f]:
                    seen_edges[f] = True
                    queue.append(f)
    return bool(seen_nodes.all() and seen_edges.all())
