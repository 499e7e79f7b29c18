"""Identifying codes on graphs: verification, exact and greedy solvers,
randomized edge-deletion sparsification, complement-graph codes, watching
systems, and the analytic bounds backing them.
"""

from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    alpha0,
    bipartite_subgraph_bound,
    bound_names,
    chernoff_constant,
    edge_deletion_sensitivity_bound,
    evaluate,
    gnp_idcode_prediction,
    idcode_lower_bound,
    sparse_edge_threshold,
)
from .codes import (
    InvalidCodeError,
    UndominatedVertex,
    UnseparatedPair,
    Verdict,
    is_dominating,
    is_identifying_code,
    is_locating_dominating,
    is_separating,
    signature,
)
from .complement import (
    ComplementNotTwinFreeError,
    EquivClassPartition,
    NoSeparatorError,
    complement_code,
    equivalence_classes,
    separate_class,
)
from .graphs import (
    FamilySpec,
    FormatError,
    Graph,
    complement,
    complete,
    complete_bipartite,
    connected_cliques,
    cycle,
    degree_stats,
    disjoint_cliques,
    dist2_pairs,
    find_twins,
    generate,
    gnp,
    parse_edge_list,
    path,
    star,
    to_dot,
    write_edge_list,
)
from .solvers import (
    NotTwinFreeError,
    SearchResult,
    exact_min_dominating,
    exact_min_idcode,
    greedy_dominating,
    greedy_idcode,
)
from .sparsify import (
    DegenerateGraphError,
    InfeasibleProbabilityError,
    RetriesExhaustedError,
    SparsifyParams,
    SparsifyResult,
    SparsifyStats,
    TrialRecord,
    Violation,
    bounded_f,
    check_events,
    pair_collision_frequency,
    pick_code,
    sample_subgraph,
    sparsify,
)
from .watching import (
    NotDominatingError,
    WatchBounds,
    Watcher,
    WatchingSystem,
    ZoneOutOfNeighborhoodError,
    verify_watching,
    watch_bounds,
    watching_binary,
    watching_from_subgraph_code,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "ComplementNotTwinFreeError",
    "DegenerateGraphError",
    "EquivClassPartition",
    "FamilySpec",
    "FormatError",
    "Graph",
    "InfeasibleProbabilityError",
    "InvalidCodeError",
    "NoSeparatorError",
    "NotDominatingError",
    "NotTwinFreeError",
    "RetriesExhaustedError",
    "SearchResult",
    "SparsifyParams",
    "SparsifyResult",
    "SparsifyStats",
    "TrialRecord",
    "UndominatedVertex",
    "UnseparatedPair",
    "Verdict",
    "Violation",
    "WatchBounds",
    "Watcher",
    "WatchingSystem",
    "ZoneOutOfNeighborhoodError",
    "alpha0",
    "bipartite_subgraph_bound",
    "bound_names",
    "bounded_f",
    "chernoff_constant",
    "check_events",
    "complement",
    "complement_code",
    "complete",
    "complete_bipartite",
    "connected_cliques",
    "cycle",
    "degree_stats",
    "disjoint_cliques",
    "dist2_pairs",
    "edge_deletion_sensitivity_bound",
    "equivalence_classes",
    "evaluate",
    "exact_min_dominating",
    "exact_min_idcode",
    "find_twins",
    "generate",
    "gnp",
    "gnp_idcode_prediction",
    "greedy_dominating",
    "greedy_idcode",
    "idcode_lower_bound",
    "is_dominating",
    "is_identifying_code",
    "is_locating_dominating",
    "is_separating",
    "pair_collision_frequency",
    "parse_edge_list",
    "path",
    "pick_code",
    "sample_subgraph",
    "separate_class",
    "signature",
    "sparse_edge_threshold",
    "sparsify",
    "star",
    "to_dot",
    "verify_watching",
    "watch_bounds",
    "watching_binary",
    "watching_from_subgraph_code",
    "write_edge_list",
]
