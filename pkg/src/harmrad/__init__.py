"""harmrad: exact Harmonic/Randic index vs. graph radius bound checking.

Computes the Randic index, Harmonic index, radius, and cyclomatic number
of simple graphs; evaluates the index-radius bounds and conjectures as
executable checks; and exhaustively verifies them (or hunts for
counterexamples) over complete families of small labeled graphs.
"""

from .bounds import (
    BoundCheckResult,
    CLAIMS,
    ClaimDomainError,
    check_claim,
    check_conjectures,
    check_cyclomatic_bound,
    check_tree_bound,
    check_unicyclic_bound,
    cycle_deletion_bound,
    minimize_cycle_deletion_bound,
)
from .families import (
    Family,
    FamilySpec,
    canonical_mask,
    connected_graphs,
    labeled_trees,
    unicyclic_graphs,
)
from .formats import FormatError, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphClass,
    GraphError,
    GraphKind,
    build_graph,
    classify,
    complete_graph,
    cycle_graph,
    cyclomatic_number,
    distance_profile,
    is_connected,
    path_graph,
    petersen_graph,
    star_graph,
)
from .indices import (
    IndexReport,
    harmonic_index,
    index_report,
    path_harmonic_closed_form,
    randic_index,
)
from .sweep import (
    Certificate,
    SweepReport,
    certificate_replays,
    replay_certificate,
    sweep,
)
from .transforms import (
    EdgeDelta,
    add_pendant,
    find_bridges,
    find_cycle_edge,
    harmonic_edge_delta,
    pendant_delta_bound,
    unicyclic_reduction,
)

__version__ = "0.1.0"
