"""Conflict-free colouring of vertex t-subsets in geometric hypergraphs.

Hypergraph containers and validity checkers, exact minimal-colouring
oracles, geometric range providers (intervals, axis-parallel rectangles,
discs), the colouring algorithms, and lower-bound constructions.  Hot
kernels run in a compiled extension when available, with a pure-Python
fallback selected at import (see ``backend_name``).
"""

from ._backend import COMPILED, backend_name
from .colouring import (
    AuxContractError,
    MinColourCode,
    colourful_greedy,
    degeneracy_greedy_colours,
    interval_um_colouring,
    interval_union_pair_colouring,
    peel_colouring,
    peel_multiplicity_check,
    rect_subset_colouring,
    sum_token_colouring,
    tuple_token_colouring,
    union_pair_colouring,
    unique_max_colouring,
    verify_interval_union_pairs,
)
from .constructions import (
    interval_subset_cf_table,
    star_hypergraph,
    tower,
    union_cf_lower_bound_check,
)
from .exact import exact_min_colours, exact_min_subset_tokens
from .geometry import (
    DegenerateError,
    Disc,
    PointSet,
    Rect,
    bounding_rect,
    cover_by_ratio_pair,
    delaunay_density,
    disc_hypergraph,
    interval_hypergraph,
    min_points_in_ratio_rect,
    ratio_class_range,
    ratio_pair_graph,
    rank_normalize,
    rect_location,
    rectangle_hypergraph,
    small_hyperedge_graph,
)
from .hypergraph import (
    BOTTOM,
    Graph,
    Hypergraph,
    SizeLimitError,
    SubsetColouring,
    VertexColouring,
    count_pairs_in_small_hyperedges,
    delaunay_graph,
    induced_subhypergraph,
    union_hypergraph,
)
from .validate import Verdict, validate_colouring, validate_subset_cf

__version__ = "0.1.0"

__all__ = [
    "AuxContractError",
    "BOTTOM",
    "COMPILED",
    "DegenerateError",
    "Disc",
    "Graph",
    "Hypergraph",
    "MinColourCode",
    "PointSet",
    "Rect",
    "SizeLimitError",
    "SubsetColouring",
    "Verdict",
    "VertexColouring",
    "backend_name",
    "bounding_rect",
    "colourful_greedy",
    "count_pairs_in_small_hyperedges",
    "cover_by_ratio_pair",
    "degeneracy_greedy_colours",
    "delaunay_density",
    "delaunay_graph",
    "disc_hypergraph",
    "exact_min_colours",
    "exact_min_subset_tokens",
    "induced_subhypergraph",
    "interval_hypergraph",
    "interval_subset_cf_table",
    "interval_um_colouring",
    "interval_union_pair_colouring",
    "min_points_in_ratio_rect",
    "peel_colouring",
    "peel_multiplicity_check",
    "rank_normalize",
    "ratio_class_range",
    "ratio_pair_graph",
    "rect_location",
    "rect_subset_colouring",
    "rectangle_hypergraph",
    "small_hyperedge_graph",
    "star_hypergraph",
    "sum_token_colouring",
    "tower",
    "tuple_token_colouring",
    "union_cf_lower_bound_check",
    "union_hypergraph",
    "union_pair_colouring",
    "unique_max_colouring",
    "validate_colouring",
    "validate_subset_cf",
    "verify_interval_union_pairs",
]
