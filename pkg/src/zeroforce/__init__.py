"""Zero forcing and positive zero forcing on graphs."""

from .errors import (
    CapExceededError,
    GraphParseError,
    InvalidOrderingError,
    InvalidParameterError,
    NotChordalError,
    PreconditionError,
    TraceInvalidError,
    ZeroForcingError,
)
from .exact import (
    MinForestWitness,
    brute_cc,
    brute_min_vertex_cover,
    brute_tree_cover_number,
    brute_z,
    brute_zplus,
    min_forest_decision,
)
from .forcing import (
    ForceEvent,
    ForcingTrace,
    Rule,
    Tree,
    TreeCover,
    derived_set,
    forcing_trees,
    is_forcing_set,
    validate_tree_cover,
)
from .generators import generate
from .graph import (
    CliqueCover,
    Graph,
    VertexOrdering,
    components,
    is_chordal,
    is_peo,
    is_simplicial,
    lex_bfs,
    maximal_cliques_chordal,
    perfect_elimination_ordering,
)
from .reductions import (
    CriticalAssignment,
    ReductionInstance,
    build_minforest_instance,
    cover_to_vc,
    critical_pairs,
    cycle_clique_forcing_sets,
    induced_tree_cover,
    one_tree_cover,
    vc_to_cover,
)
from .search import (
    ParallelState,
    SearchAction,
    SearchStrategy,
    fms_to_zf,
    pfms_to_pzf,
    pzf_to_pfms,
    simulate_fms,
    simulate_pfms,
    zf_to_fms,
)
from .zplus_chordal import EdgeColouring, ZplusResult, forcing_process_from_result, t_black, zplus_chordal

__all__ = [name for name in dir() if not name.startswith("_")]
