"""k-circular matroids of finite multigraphs, with a brute-force oracle to check them against."""
from .errors import *  # noqa: F401,F403
from .graphcore import (
    BicycleKind,
    MultiGraph,
    SubgraphView,
    canonical_sort,
    classify_bicycle,
    coloop_edge_test,
    components,
    core,
    delta,
    induced,
    is_cacti,
    is_cycle,
    is_two_connected,
    kernel,
    strongly_isomorphic,
    tree_components,
)
from .kcirc import CocircuitKind, KCircularMatroid
from .ears import (
    Ear,
    EarAssembly,
    EarKind,
    cacti_subgraph_through,
    circuit_extension,
    decompose_circuit,
    ear_assembly,
    ear_assembly_2conn,
    find_bicycle_through,
    grow_circuit,
    validate_assembly,
)
from .oracle import (
    BruteMatroid,
    brute_circuits,
    brute_dual_cocircuit,
    brute_is_connected,
    check_axioms,
    check_ivt,
    f_k,
    matroids_equal,
)
from .cli import parse_graph, serialize_graph

__version__ = "0.1.0"
