"""Exact vector graphs on integer lattices: construction, linear colorings,
Moser spindle placement and exact chromatic numbers of finite windows."""

from vgraph.errors import (
    DimensionError,
    GraphParseError,
    SolverCapExceeded,
    UnsupportedVersionError,
    ValidationError,
)
from vgraph.field import QReal, XYVec
from vgraph.lattice import (
    FiniteGraph,
    VectorGraphInstance,
    ball,
    embed,
    induced_subgraph,
    is_adjacent,
    moser_instance,
    neighbors,
    unit_distance_pairs,
    verify_unique_representation,
    zsquare_instance,
)
from vgraph.linear import (
    LinearColoring,
    eval_linear,
    is_proper_linear,
    search_linear,
    verify_on_graph,
)
from vgraph.solver import (
    ColoringResult,
    chromatic_number,
    dsatur,
    greedy_coloring,
    k_colorable,
    max_clique_lb,
)
from vgraph.spindle import (
    SpindleEmbedding,
    canonical_spindle,
    spindle_at,
    verify_spindle,
)

__version__ = "0.1.0"
