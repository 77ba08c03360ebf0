"""Domination parameters of graph covers."""

from .bounds import (
    Bound,
    BoundReport,
    ConnectorCertificate,
    check_sandwich,
    classical_bounds,
    connect_lifted_trees,
    cover_bounds,
    harmonic,
    lift_dominating_set,
)
from .cover import (
    CoverError,
    CoveringProjection,
    VoltageAssignment,
    compose,
    fiber,
    identity_projection,
    lift,
    preimage_subgraph,
    random_voltages,
    verify_projection,
)
from .domsolve import (
    DominationCertificate,
    GreedyTrace,
    SolverError,
    brute_force_number,
    diagonal_perfect_code,
    domination_number,
    greedy_dominating_set,
    is_connected_dominating,
    is_dominating,
    is_efficient_dominating,
    is_total_dominating,
    torus,
)
from .graph import (
    Graph,
    GraphError,
    cartesian_product,
    cycle,
    dodecahedron,
    from_edge_list,
    grid,
    parse_graph6,
    path,
    petersen,
    stats,
    to_graph6,
)
from .harness import ExperimentRecord, fixture, load, persist, ratio_experiment, summarize

__version__ = "0.1.0"
