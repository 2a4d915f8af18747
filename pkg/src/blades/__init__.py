"""Blade arrangements, weakly separated collections and matroidal subdivisions of hypersimplices."""
from .boundary import delete_coordinate, restrict_collection, restrict_osp, restrict_vertex
from .combinatorics import (
    GroundSet,
    KSubset,
    WSCollection,
    cyclic_intervals,
    frozen_subsets,
    is_frozen,
    is_weakly_separated,
    is_ws_collection,
)
from .enumeration import (
    build_graph,
    count_maximal_collections,
    cross_validate_theorem,
    enumerate_collections,
    maximal_collections,
    verify_purity,
)
from .osp import (
    Blade,
    DecoratedOSP,
    Plate,
    blade_from_vertex,
    blade_membership,
    format_osp,
    parse_osp,
    translated_blade_membership,
)
from .subdivision import (
    BladeArrangement,
    Cell,
    Subdivision,
    cell_from_inequalities,
    dual_graph,
    eulerian_number,
    induce_subdivision,
    is_matroid_cell,
    is_matroidal,
    two_split_compatible,
)
from .trees import Split, SplitTree, tree_arrangement, tree_from_splits

__version__ = "0.1.0"
