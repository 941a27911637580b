"""Signed graph algorithms: balance, negative girth, balanced colourings,
Kneser and Schrijver signed graphs, obstructions and extremal search."""

from .canon import canonical_form, graph_from_form
from .cert4 import Certificate41, layer_certificate, thm41_check
from .coloring import (
    BalancedColoring,
    BudgetExhausted,
    ChiBResult,
    balanced_chromatic_number,
    check_coloring,
    chi_b,
    chi_b_oracle,
    chromatic_number,
    is_balanced_set,
    max_balanced_p_colorable_subgraph,
    max_balanced_set,
)
from .core import (
    NEG,
    POS,
    BalanceResult,
    Girth,
    GraphError,
    NegativeCycle,
    SignedGraph,
    ball,
    closed_walk_sign,
    distance,
    double_cover,
    induced,
    is_balanced,
    negative_girth,
    negative_subgraph,
    new_graph,
    radius_in,
    switch,
    to_all_negative,
)
from .intmath import q_root
from .kneser import (
    SignedSubset,
    antitwin_pairs,
    is_alternating,
    kneser_girth_formula,
    kneser_signed,
    lower_bound_witness,
    reduce_double_switching,
    schrijver_signed,
    shift_cycle_witness,
    signed_subsets,
)
from .kst import Obstruction, RootScale, ball_hypothesis_check, find_obstruction, peel_color
from .mycielski import fig13, generalized_mycielskian
from .search import SearchReport, lambda_s_harness, n_s_search

__version__ = "0.1.0"
