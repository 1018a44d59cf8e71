"""Node and hyperedge centralities for weighted hypergraphs.

The centralities are the positive solution of a coupled nonlinear
eigenproblem on the incidence matrix, computed with a nonlinear power
method. See :func:`npm_solve`.
"""
from .generators import SunflowerSpec, generate_sunflower, petal_node_groups, random_hypergraph
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    WeightedGraph,
    apply_BtN,
    apply_BW,
    bipartite_connected,
    build_hypergraph,
    clique_expansion,
    line_graph_expansion,
)
from .maps import (
    CentralityModel,
    MapDomainError,
    NonlinearMap,
    eval_map,
    make_linear,
    make_logexp,
    make_max,
    make_model,
    model_rho,
)
from .ranking import RankedList, intersection_similarity, kendall_tau, rank, similarity_curves, spearman
from .solver import (
    CentralitySolution,
    ConditionReport,
    PreconditionError,
    SolverError,
    SolverOptions,
    check_conditions,
    contraction_factor,
    convergence_rate,
    npm_solve,
    residual,
)

__version__ = "0.1.0"
