"""Weighted upper edge cover and maximum weighted spanning star forest.

Exact oracles, approximation engines for complete graphs, k-trees and
bounded-degree graphs, gadget reductions from Independent Set, and a
text instance format with a command-line front end.
"""

from .errors import WuecError, InputError, InvalidEdgeError, NotAStarForest, ForcedConflict, CannotAttach, NotAForest, NotAKTree, WrongClass, DegreeViolation, Infeasible, BudgetExceeded, ParseError  # noqa: F401
from .graph import (  # noqa: F401
    CycleWitness,
    ForcedStarPacking,
    MinimalEdgeCover,
    StarForest,
    WeightedGraph,
    attach_trivials,
    check_cycle_inequality,
    is_edge_cover,
    is_minimal_edge_cover,
    is_nice,
    nicify,
    star_forest_decompose,
)
from .exact import (  # noqa: F401
    Budget,
    SolveReport,
    alpha_exact,
    ext_wssf_exact,
    gamma_exact,
    uec_exact,
    uec_unweighted,
    wssf_exact,
)
from .treedp import wssf_tree_dp  # noqa: F401
from .ktree import KTreeColoring, ktree_recognize  # noqa: F401
from .conflict import build_conflict_graph, greedy_weighted_mis  # noqa: F401
from .approx import (  # noqa: F401
    ext_wssf_half_approx,
    uec_bounded_degree_approx,
    uec_complete_approx,
    uec_ktree_approx,
    wssf_half_approx,
)
from .reductions import (  # noqa: F401
    ReductionCertificate,
    map_back_bipartite,
    map_back_ktree,
    map_back_split,
    reduce_is_to_bipartite,
    reduce_is_to_ktree,
    reduce_is_to_split,
    reduce_wssf_to_complete,
    verify_certificate,
)
from .instance import Instance, emit_instance, parse_instance  # noqa: F401
from .generators import generate  # noqa: F401

__version__ = "0.1.0"
