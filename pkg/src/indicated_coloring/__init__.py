"""Exact engine and verification harness for the indicated-coloring game."""

from .graphs import (
    ExpansionSpec,
    Graph,
    GraphError,
    build_graph,
    complement,
    complete_expansion,
    disjoint_union,
    expansion,
    independent_expansion,
    lexicographic_product,
)
from .families import family_generator
from .graph6 import decode_graph6, encode_graph6
from .isomorphism import is_isomorphic
from .parameters import (
    ParamReport,
    chromatic_number,
    clique_number,
    coloring_number,
    degeneracy_order,
    degree_stats,
    param_report,
)
from .solver import (
    ChiIResult,
    GameState,
    Limits,
    Outcome,
    Transcript,
    Verdict,
    ann_wins,
    blocked_vertices,
    canonical_key,
    extract_policy,
    indicated_chromatic_number,
    play_game,
)
from .strategies import (
    ProductCoords,
    all_ben_lines,
    degeneracy_ann,
    heuristic_ben,
    optimal_ben,
    product_col_ann,
    reduction_ann,
)
from .recognizers import (
    ClassReport,
    classify,
    contains_induced,
    expansion_closure_check,
    family_membership_F,
)
from .harness import SuiteReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
