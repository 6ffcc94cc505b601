"""Exact solver, strategy library, and verification harness for the
slow-coloring game on small graphs.

In the slow-coloring game, Lister repeatedly marks a nonempty set of the
remaining vertices, scoring one point per mark, and Painter deletes an
independent subset of the marked set; the game ends when the graph is empty.
The optimal total score is the sum-color cost of the graph.  This package
computes it exactly at desk scale, implements the constructive strategies
with their guarantees, decides token-game paintability, and batch-verifies
the known formulas and bounds.
"""

from .canon import canonical_key, canonical_key_colored
from .families import FamilySpec, ParseError, generate, parse_family, parse_graph
from .formulas import (
    alpha2_value,
    bipartite_bounds,
    bipartite_dp,
    bipartite_lower_bound,
    bipartite_upper_holds,
    closed_form,
    join_dp,
    krr_fit,
    multipartite_equality_check,
    triangular,
    u,
)
from .game import GameRecord, IllegalMoveError
from .graph import (
    Graph,
    VertexSet,
    bits,
    complement,
    components,
    connected_subsets,
    delete_vertices,
    graph_join,
    graph_union,
    induced_subgraph,
    is_independent,
    mask_of,
    maximal_independent_subsets,
)
from .invariants import (
    BoundReport,
    bound_report,
    chromatic_sum,
    hall_ratio,
    independence_number,
    max_matching,
)
from .paintability import is_f_paintable, sum_paintability
from .solver import (
    SolveResult,
    SolverCache,
    SolverLimitError,
    brute_force_value,
    optimal_painter_response,
    score_lower_certificate,
    solve,
)
from .strategies import (
    ListerStrategy,
    PainterStrategy,
    lister_bipartite,
    lister_disjoint,
    lister_guarantee,
    lister_join,
    lister_mark_all,
    lister_multipartite,
    lister_star,
    lister_tree,
    painter_alpha2,
    painter_bipartite_threshold,
    painter_greedy,
    painter_guarantee,
    painter_tree,
    run_game,
)

__version__ = "0.1.0"
