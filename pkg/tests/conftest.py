import numpy as np
import pytest

from hypercent import random_hypergraph


def dense_incidence(h):
    """B built entry by entry from the edge lists, independent of the CSR path."""
    B = np.zeros((h.n, h.m))
    for e, members in enumerate(h.incidence_by_edge):
        for i in members:
            B[i, e] = 1.0
    return B


def small_instances(count, seed=0, n=(5, 11), m=(3, 9), **kwargs):
    """Seeded random connected hypergraphs with n, m drawn from half-open ranges."""
    out = []
    for k in range(count):
        rng = np.random.default_rng(seed + k)
        nn = int(rng.integers(*n))
        mm = int(rng.integers(*m))
        out.append(random_hypergraph(nn, mm, rng, **kwargs))
    return out


@pytest.fixture
def weighted_instance():
    return random_hypergraph(5, 4, 3, node_weight_range=(0.5, 2.0))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
