"""Exact Laplacian spectral moments of digraphs.

Integer-exact moment computation, dichromatic numbers at desk scale,
extremal family constructors, closed-form bounds per dichromatic class,
and brute-force verification of every bound.
"""

from .digraph import (
    Digraph,
    WalkProfile,
    from_edge_list,
    induced_subdigraph,
    is_acyclic,
    is_weakly_connected,
    join,
    to_dot,
    to_edge_list,
    walk_profile,
)
from .spectral import (
    MomentReport,
    adjacency_moment,
    laplacian,
    le_via_degrees,
    lsm3_via_walks,
    lsm_numeric,
    lsm_trace,
    lsm_trace_squaring,
)
from .chromatic import (
    AcyclicPartition,
    arc_reversal_descent,
    critical_core,
    dichromatic_number,
    find_acyclic_partition,
    is_critical_vertex,
)
from .families import (
    Composition,
    JoinSpec,
    StructureReport,
    classify,
    compositions,
    in_tree,
    join_digraph,
    matches_theorem210_structure,
    parse_join_spec,
    standard_family,
    theorem210_minimizer,
    transitive_tournament,
)
from .bounds import (
    BoundReport,
    KaramataParams,
    all_digraph_le_extreme,
    cor34_bounds,
    global_le_bounds,
    join_le_closed_form,
    join_le_extreme,
    join_lsm3_closed_form,
    join_lsm3_from_parts,
    karamata_move,
    optimize_composition,
)
from .oracle import (
    VerificationReport,
    chi_of_digraph,
    composition_scan,
    enumerate_digraphs,
    extremal_scan,
    minimum_le_evidence,
    verify_theorem,
)

__version__ = "0.1.0"
