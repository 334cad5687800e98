"""Wiener indices of unicyclic graphs.

Computes Wiener indices, constructs the extremal configurations of the
minimum-Wiener problem on unicyclic graphs with a prescribed number of
even-degree vertices, implements the Wiener-decreasing transformations behind
those results, and verifies the structure theorems exhaustively at desk scale.
"""

from .canon import CanonicalCode, canonical_code
from .enumeration import (
    ClassSummary,
    aut_order,
    class_summaries,
    enumerate_labeled_oracle,
    enumerate_unicyclic,
    labeled_unicyclic_count,
    min_wiener,
)
from .errors import GraphError
from .families import (
    HComposition,
    SubdividedStarSpec,
    hang_at_first,
    make_cycle,
    make_H,
    make_path,
    make_sab,
    make_star,
    pentagon_with_pendant,
    theorem1_family,
    theorem2_family,
)
from .graph import (
    ClassKey,
    DistanceVector,
    Graph,
    UnicyclicGraph,
    build_unicyclic,
    cycle_transmission_closed,
    distances,
    even_degree_count,
    transmission,
    vertex_identify,
    wiener,
    wiener_cycle_closed,
    wiener_path_closed,
    wiener_vertex_join,
)
from .transforms import (
    ContractionChoice,
    ShiftSpec,
    contract_and_leaf,
    contraction_choice,
    cycle_distance_drop,
    operation_A,
    operation_A_delta_closed,
    rebalance,
    shift,
    shift_over_bridge,
)
from .trees import RootedTree, rooted_trees
from .verify import (
    VerificationReport,
    run_checks,
    verify_lemmas,
    verify_structural_claims,
    verify_theorem1,
    verify_theorem2,
)

__version__ = "0.1.0"
