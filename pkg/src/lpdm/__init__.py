"""Exact combinatorics of lattice path interval families.

Subsets of {1..n} ordered by suffix counts form a graded lattice; an
interval [S, T] in that order is the feasible family of a delta
matroid whose polytope is cut out by suffix-sum inequalities.  The
package provides the order, the path and diagram encodings, matroid
operations, polytope geometry, unimodular triangulations, and
independent counting oracles, all in integer and rational arithmetic.
"""

from .errors import ArgumentError, DomainError, LpdmError, OrderError, UsageError
from .matroid import (
    LpdmSpec,
    SetFamily,
    TypeALpmSpec,
    catalan_spec,
    classify_elements,
    contract,
    delete,
    direct_sum,
    dual,
    envelope_bases,
    envelope_ground,
    envelope_project,
    exchange_witness,
    family_interval_bounds,
    feasible_sets,
    homogeneous_component,
    project_element,
    relabel,
    signed_label_set,
    verify_exchange,
)
from .oracle import (
    EhrhartTable,
    affine_rank,
    count_lattice_points,
    ehrhart_eval,
    ehrhart_table,
    ehrhart_volume,
    hull_membership,
    is_edge,
    simplex_volume,
)
from .paths import (
    PathWord,
    SkewBoxSet,
    bounding_path_meets,
    column_heights,
    is_snake,
    is_symmetric,
    path_from_subset,
    path_leq,
    path_points,
    skew_boxes,
    skew_svg,
    subset_from_path,
)
from .perms import (
    Permutation,
    all_permutations,
    chain_to_permutation,
    count_perms_with_ascent_set,
    count_perms_with_descent_set,
    descent_ascent_sets,
    eulerian_number,
    permutation_to_chain,
)
from .polytope import (
    Facet,
    FaceResult,
    HRep,
    contains,
    dimension,
    face,
    hrep,
    intersect,
    is_linked,
    vertex_set,
)
from .selftest import ACCEPTANCE, CHECKS, CheckFailure, CheckResult, run_selftest
from .subsets import (
    GaleChain,
    SubsetMask,
    all_subsets,
    cover_successors,
    count_maximal_chains,
    gale_leq,
    gale_leq_definitional,
    gale_rank,
    interval,
    is_valid_profile,
    mask_from_profile,
    profile,
    sort_key,
)
from .triangulate import (
    LatticeSimplex,
    Subdivision,
    eulerian_simplex,
    fractional_prefix_sums,
    is_toric,
    simplex_cell,
    subdivide,
    triangulate_toric,
    volume,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPTANCE",
    "ArgumentError",
    "CHECKS",
    "CheckFailure",
    "CheckResult",
    "DomainError",
    "EhrhartTable",
    "FaceResult",
    "Facet",
    "GaleChain",
    "HRep",
    "LatticeSimplex",
    "LpdmError",
    "LpdmSpec",
    "OrderError",
    "PathWord",
    "Permutation",
    "SetFamily",
    "SkewBoxSet",
    "Subdivision",
    "SubsetMask",
    "TypeALpmSpec",
    "UsageError",
    "affine_rank",
    "all_permutations",
    "all_subsets",
    "bounding_path_meets",
    "catalan_spec",
    "chain_to_permutation",
    "classify_elements",
    "column_heights",
    "contains",
    "contract",
    "count_lattice_points",
    "count_maximal_chains",
    "count_perms_with_ascent_set",
    "count_perms_with_descent_set",
    "cover_successors",
    "delete",
    "descent_ascent_sets",
    "dimension",
    "direct_sum",
    "dual",
    "ehrhart_eval",
    "ehrhart_table",
    "ehrhart_volume",
    "envelope_bases",
    "envelope_ground",
    "envelope_project",
    "eulerian_number",
    "eulerian_simplex",
    "exchange_witness",
    "face",
    "family_interval_bounds",
    "feasible_sets",
    "fractional_prefix_sums",
    "gale_leq",
    "gale_leq_definitional",
    "gale_rank",
    "homogeneous_component",
    "hrep",
    "hull_membership",
    "intersect",
    "interval",
    "is_edge",
    "is_linked",
    "is_snake",
    "is_symmetric",
    "is_toric",
    "is_valid_profile",
    "mask_from_profile",
    "path_from_subset",
    "path_leq",
    "path_points",
    "permutation_to_chain",
    "profile",
    "project_element",
    "relabel",
    "run_selftest",
    "signed_label_set",
    "simplex_cell",
    "simplex_volume",
    "skew_boxes",
    "skew_svg",
    "sort_key",
    "subdivide",
    "subset_from_path",
    "triangulate_toric",
    "verify_exchange",
    "vertex_set",
    "volume",
]
