"""Chromatic symmetric functions of trees in the star basis.

Expand forests by deletion/near-contraction, read the leading term and
leaf-component adjacencies off the expansion, and rebuild trees of
diameter at most five from it.
"""

from .analysis import (
    AdjacencyReport,
    adjacency_multisets,
    analyze,
    hook_check,
    internal_component_orders,
    leading_partition,
    n_of_p,
    predicted_leading,
)
from .dnc import DncTrace, hook_coefficient_predicted, star_expand, star_expand_traced
from .forest import (
    Forest,
    attach_stars,
    bistar,
    enumerate_trees,
    format_edge_list,
    from_graph6,
    is_isomorphic,
    parse_edge_list,
    path,
    star,
    star_forest,
    to_graph6,
)
from .oracle import chromatic_count, power_csf
from .partition import Partition
from .reconstruct import NoCandidate, NotATreeCSF, ReconstructionResult, reconstruct
from .symfunc import SymFunc, multiply, to_power, to_star

__version__ = "0.1.0"
