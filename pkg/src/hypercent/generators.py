"""Synthetic hypergraphs: sunflowers and seeded random connected instances."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .hypergraph import Hypergraph, build_hypergraph


@dataclass(frozen=True)
class SunflowerSpec:
    """Petal sizes of a sunflower; each size counts the shared core node."""

    petal_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.petal_sizes)
        if not sizes:
            raise ValueError("a sunflower needs at least one petal")
        if min(sizes) < 2:
            raise ValueError("every petal must contain the core and at least one other node")
        object.__setattr__(self, "petal_sizes", sizes)

    @property
    def r(self) -> int:
        return len(self.petal_sizes)


def generate_sunflower(spec) -> Hypergraph:
    """Sunflower hypergraph with core node 0 and unit weights.

    Petal ``i`` is the core plus ``petal_sizes[i] - 1`` fresh nodes, numbered
    consecutively after the previous petal's nodes.

    >>> generate_sunflower(SunflowerSpec([3, 3])).incidence_by_edge
    ((0, 1, 2), (0, 3, 4))
    """
    if not isinstance(spec, SunflowerSpec):
        spec = SunflowerSpec(tuple(spec))
    edges = []
    nxt = 1
    for size in spec.petal_sizes:
        edges.append(([0, *range(nxt, nxt + size - 1)], 1.0))
        nxt += size - 1
    return build_hypergraph(edges)


def petal_node_groups(spec) -> list:
    """Node ids of each petal excluding the core, in petal order."""
    if not isinstance(spec, SunflowerSpec):
        spec = SunflowerSpec(tuple(spec))
    groups, nxt = [], 1
    for size in spec.petal_sizes:
        groups.append(list(range(nxt, nxt + size - 1)))
        nxt += size - 1
    return groups


def random_hypergraph(
    n: int,
    m: int,
    seed=None,
    *,
    min_size: int = 2,
    max_size: int = 4,
    uniform: Optional[int] = None,
    weight_range: Optional[Sequence[float]] = (0.5, 2.0),
    node_weight_range: Optional[Sequence[float]] = None,
) -> Hypergraph:
    """Random hypergraph whose node-edge incidence graph is connected.

    Nodes are visited in a random order; each edge takes one already covered
    node plus a share of not-yet-covered nodes, then is topped up with random
    covered nodes. Duplicate edges are merged as in
    :func:`~hypercent.hypergraph.build_hypergraph`, so the result can have
    fewer than ``m`` edges.

    Parameters
    ----------
    n, m : int
        Number of nodes and of sampled edges.
    seed : int or numpy.random.Generator
    min_size, max_size : int
        Range of edge sizes, ignored when ``uniform`` is given.
    uniform : int, optional
        Make every edge this size.
    weight_range, node_weight_range : (low, high) or None
        Uniform ranges for edge and node weights; ``None`` means unit weights.
    """
    rng = np.random.default_rng(seed)
    if uniform is not None:
        min_size = max_size = int(uniform)
    max_size = min(max_size, n)
    if not 1 <= min_size <= max_size:
        raise ValueError(f"invalid edge size range [{min_size}, {max_size}] for n={n}")
    sizes = rng.integers(min_size, max_size + 1, size=m)
    capacity = int(np.sum(sizes - 1))
    while capacity < n - 1:
        grow = np.flatnonzero(sizes < max_size)
        if grow.size == 0:
            raise ValueError(f"{m} edges of size <= {max_size} cannot connect {n} nodes")
        sizes[rng.choice(grow)] += 1
        capacity += 1

    order = [int(v) for v in rng.permutation(n)]
    covered = [order[0]]
    pending = order[1:]
    edges = []
    for size in sizes:
        fresh = min(int(size) - 1, len(pending))
        members = {covered[int(rng.integers(len(covered)))]}
        new_nodes, pending = pending[:fresh], pending[fresh:]
        members.update(new_nodes)
        covered.extend(new_nodes)
        while len(members) < size:
            members.add(covered[int(rng.integers(len(covered)))])
        edges.append(sorted(members))
    edges = [edges[i] for i in rng.permutation(len(edges))]

    if weight_range is None:
        w = np.ones(len(edges))
    else:
        w = rng.uniform(*weight_range, size=len(edges))
    nu = None
    if node_weight_range is not None:
        nu = rng.uniform(*node_weight_range, size=n)
    return build_hypergraph(zip(edges, w), node_weights=nu, n=n)
