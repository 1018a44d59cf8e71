import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercent import (
    Hypergraph,
    HypergraphError,
    apply_BtN,
    apply_BW,
    bipartite_connected,
    build_hypergraph,
    clique_expansion,
    generate_sunflower,
    line_graph_expansion,
    random_hypergraph,
)

from conftest import dense_incidence, small_instances


class TestBuild:
    def test_single_edge(self):
        h = build_hypergraph([({0, 1}, 1)])
        assert (h.n, h.m) == (2, 1)
        assert h.edge_weights.tolist() == [1.0]
        assert h.weighted_degrees().tolist() == [1.0, 1.0]

    def test_duplicate_edges_merge(self):
        h = build_hypergraph([({0, 1, 2}, 1), ({0, 1, 2}, 1)])
        assert h.m == 1
        assert h.edge_weights.tolist() == [2.0]

    def test_merge_keeps_first_position(self):
        h = build_hypergraph([((3, 4), 1), ((0, 1), 2), ((4, 3), 5)])
        assert h.incidence_by_edge == ((3, 4), (0, 1))
        assert h.edge_weights.tolist() == [6.0, 2.0]

    def test_duplicate_members_collapse(self):
        h = build_hypergraph([([5, 5, 7], 1)])
        assert h.incidence_by_edge == ((5, 7),)

    def test_default_node_weights(self):
        h = build_hypergraph([((0, 2), 1)])
        assert h.node_weights.tolist() == [1.0, 1.0, 1.0]

    def test_dual_index(self):
        h = build_hypergraph([((0, 1), 1), ((1, 2, 3), 1), ((0, 3), 1)])
        assert h.incidence_by_node == ((0, 2), (0, 1), (1,), (1, 2))
        for e, members in enumerate(h.incidence_by_edge):
            for i in range(h.n):
                assert (i in members) == (e in h.incidence_by_node[i])

    @pytest.mark.parametrize("weight", [0, -1.0, float("nan")])
    def test_rejects_bad_edge_weight(self, weight):
        with pytest.raises(HypergraphError):
            build_hypergraph([((0, 1), weight)])

    def test_rejects_bad_node_weight(self):
        with pytest.raises(HypergraphError):
            build_hypergraph([((0, 1), 1)], node_weights=[1.0, 0.0])

    def test_rejects_empty(self):
        with pytest.raises(HypergraphError):
            build_hypergraph([])
        with pytest.raises(HypergraphError):
            build_hypergraph([((), 1)])

    def test_isolated_nodes_allowed(self):
        h = build_hypergraph([((0, 1), 1)], n=4)
        assert h.node_degrees.tolist() == [1, 1, 0, 0]

    def test_roundtrip_dict(self, weighted_instance):
        h = weighted_instance
        assert Hypergraph.from_dict(h.to_dict()) == h

    def test_immutable_weights(self, weighted_instance):
        with pytest.raises(ValueError):
            weighted_instance.edge_weights[0] = 3.0


class TestIncidenceProducts:
    def test_apply_BW_single_edge(self):
        h = build_hypergraph([({0, 1}, 1)])
        assert apply_BW(h, [1.0]).tolist() == [1.0, 1.0]

    def test_apply_BW_scaling(self):
        h = build_hypergraph([({0, 1, 2}, 3)])
        assert apply_BW(h, [2.0]).tolist() == [6.0, 6.0, 6.0]

    def test_apply_BtN_single_edge(self):
        h = build_hypergraph([({0, 1}, 1)])
        assert apply_BtN(h, [1.0, 1.0]).tolist() == [2.0]

    def test_apply_BtN_node_weights(self):
        h = build_hypergraph([({0, 1, 2}, 1)], node_weights=[1, 2, 3])
        assert apply_BtN(h, [1.0, 1.0, 1.0]).tolist() == [6.0]

    def test_against_dense(self, weighted_instance):
        h = weighted_instance
        rng = np.random.default_rng(1)
        B = dense_incidence(h)
        y = rng.standard_normal(h.m)
        x = rng.standard_normal(h.n)
        np.testing.assert_allclose(apply_BW(h, y), B @ np.diag(h.edge_weights) @ y, rtol=1e-14)
        np.testing.assert_allclose(apply_BtN(h, x), B.T @ np.diag(h.node_weights) @ x, rtol=1e-14)

    def test_length_mismatch(self, weighted_instance):
        with pytest.raises(ValueError):
            apply_BW(weighted_instance, np.ones(weighted_instance.m + 1))
        with pytest.raises(ValueError):
            apply_BtN(weighted_instance, np.ones(weighted_instance.n - 1))

    @pytest.mark.parametrize("h", small_instances(10, seed=50, node_weight_range=(0.5, 2)))
    def test_transpose_consistency(self, h):
        # <x, B W y> == <W B^T x, y>, with B^T applied through the dual index
        rng = np.random.default_rng(h.n * 31 + h.m)
        x = rng.standard_normal(h.n)
        y = rng.standard_normal(h.m)
        bt_x = np.array([sum(x[i] for i in e) for e in h.incidence_by_edge])
        np.testing.assert_allclose(x @ apply_BW(h, y), (h.edge_weights * bt_x) @ y, rtol=1e-12)


class TestExpansions:
    def test_clique_single_edge(self):
        g = clique_expansion(build_hypergraph([({0, 1, 2}, 1)]))
        np.testing.assert_array_equal(g.adjacency.toarray(), np.ones((3, 3)) - np.eye(3))
        assert g.degrees.tolist() == [1.0, 1.0, 1.0]

    def test_clique_of_plain_graph(self):
        edges = [((0, 1), 2.0), ((1, 2), 0.5), ((0, 3), 1.5)]
        g = clique_expansion(build_hypergraph(edges))
        A = np.zeros((4, 4))
        for (a, b), w in edges:
            A[a, b] = A[b, a] = w
        np.testing.assert_array_equal(g.adjacency.toarray(), A)

    @pytest.mark.parametrize("h", small_instances(10, seed=10, node_weight_range=(0.5, 2)))
    def test_clique_gram_identity(self, h):
        B = dense_incidence(h)
        g = clique_expansion(h)
        np.testing.assert_allclose(g.dense(), B @ np.diag(h.edge_weights) @ B.T, rtol=1e-13)
        A = g.adjacency.toarray()
        np.testing.assert_array_equal(A, A.T)
        np.testing.assert_array_equal(np.diag(A), 0)

    def test_clique_degrees_exhaustive(self):
        h = random_hypergraph(50, 40, 4, max_size=6)
        d = clique_expansion(h).degrees
        for i in range(h.n):
            expected = sum(w for e, w in zip(h.incidence_by_edge, h.edge_weights) if i in e)
            assert d[i] == pytest.approx(expected, rel=1e-14)

    def test_line_graph_two_edges(self):
        g = line_graph_expansion(build_hypergraph([({0, 1}, 1), ({1, 2}, 1)]))
        np.testing.assert_array_equal(g.adjacency.toarray(), [[0, 1], [1, 0]])
        assert g.degrees.tolist() == [2.0, 2.0]

    def test_line_graph_disjoint(self):
        g = line_graph_expansion(build_hypergraph([({0, 1}, 1), ({2, 3}, 1)]))
        assert g.adjacency.nnz == 0

    @pytest.mark.parametrize("h", small_instances(10, seed=20, node_weight_range=(0.5, 2)))
    def test_line_graph_gram_identity(self, h):
        B = dense_incidence(h)
        g = line_graph_expansion(h)
        np.testing.assert_allclose(g.dense(), B.T @ np.diag(h.node_weights) @ B, rtol=1e-13)


class TestConnectivity:
    def test_single_edge(self):
        assert bipartite_connected(build_hypergraph([(range(5), 1)]))

    def test_disjoint_edges(self):
        assert not bipartite_connected(build_hypergraph([((0, 1), 1), ((2, 3), 1)]))

    @pytest.mark.parametrize("r", [2, 3, 8])
    def test_sunflower(self, r):
        assert bipartite_connected(generate_sunflower([3] * r))

    def test_isolated_node(self):
        assert not bipartite_connected(build_hypergraph([((0, 1), 1)], n=3))

    @pytest.mark.parametrize("h", small_instances(20, seed=0))
    def test_generator_is_connected(self, h):
        assert bipartite_connected(h)


edge_lists = st.lists(
    st.tuples(st.sets(st.integers(0, 12), min_size=1, max_size=5), st.floats(0.1, 10)),
    min_size=1,
    max_size=10,
)


@settings(max_examples=60, deadline=None)
@given(edge_lists)
def test_build_invariants(edges):
    h = build_hypergraph(edges)
    assert h.m == len({frozenset(e) for e, _ in edges})
    assert h.edge_weights.sum() == pytest.approx(sum(w for _, w in edges))
    for e, members in enumerate(h.incidence_by_edge):
        assert list(members) == sorted(set(members))
        for i in members:
            assert e in h.incidence_by_node[i]
    assert Hypergraph.from_dict(h.to_dict()) == h
