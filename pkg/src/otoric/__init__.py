"""Circuit binomials of toric ideals of vertex-weighted oriented graphs."""

from .circuits import (
    Binomial,
    BinomialVector,
    Circuit,
    balanced_cycle_generator,
    circuits,
    gcd_normalize,
    path_connected_generator,
    render_binomial,
    shared_path_generator,
    shared_vertex_generator,
)
from .cycles import (
    CircuitSupport,
    CycleSubgraph,
    PathSubgraph,
    SupportKind,
    enumerate_cycles,
    find_circuit_supports,
    is_balanced,
    usual_labelling_matrix,
)
from .graph import (
    WeightedOrientedGraph,
    incidence_matrix,
    load_graph,
    normalize_sink_weights,
    parse_graph,
    serialize_graph,
    structural_queries,
)
from .linalg import IntMatrix, RationalVector, det, kernel_contains, minor, rank, rational_kernel_basis
from .oracle import OracleBudget, circuits_brute_force, graver_small, is_circuit_support, is_primitive
from .robustness import RobustnessReport, betti_table, check_robust_class, mu_of

__version__ = "0.1.0"
