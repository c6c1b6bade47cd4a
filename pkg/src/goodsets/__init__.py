"""Exact analysis of good sets in finite Cartesian products.

A finite set of n-tuples is *good* when every rational function on it splits
into a sum of per-axis functions, and *full* when it is good and maximal
inside the product of its own projections. This package decides both
properties by exact rational rank computations, finds boundary sets, solves
the additive decomposition with boundary conditions, enumerates full
subsets, components, and geodesics, and generates a three-dimensional
family of instances whose structural claims it verifies end to end.

All arithmetic is exact (fractions.Fraction); there is no floating point in
any decision path.
"""

from .analysis import (
    BoundarySet,
    Decomposition,
    DependenceCertificate,
    GoodnessReport,
    analyze_goodness,
    decompose,
    find_boundary,
    is_boundary,
    is_full,
    is_good,
)
from .components import (
    DEFAULT_CAP,
    GeodesicResult,
    Partition,
    enumerate_full_subset_indices,
    enumerate_full_subsets,
    full_components,
    geodesic,
    related_components,
)
from .errors import (
    AxisOutOfRangeError,
    DimensionMismatchError,
    DuplicatePointError,
    EmptySetError,
    EmptySymbolError,
    FamilyTooSmallError,
    GoodSetError,
    MissingBoundaryValueError,
    NegativeIndexError,
    NotABoundaryError,
    NotGoodError,
    NotSquareError,
    ParseError,
    PointNotInSetError,
    SetTooLargeError,
    ShapeMismatchError,
    UnknownCoordinateError,
    VerificationFailedError,
)
from .family import (
    CheckReport,
    FamilyInstance,
    ReducedIncidence,
    RowSumBoundFit,
    family,
    reduced_incidence,
    row_sum_bound_report,
    verify_block_properties,
    verify_full_via_inverse,
    verify_geodesic,
    verify_no_full_subsets,
    verify_prefix_boundary,
)
from .linalg import (
    Matrix,
    abs_row_sums,
    invert,
    kernel_basis,
    rank,
    row_sums,
    rref,
    solve,
)
from .model import (
    CoordinateLabel,
    IncidenceSystem,
    Point,
    PointSet,
    build_incidence,
    coordinate_labels,
    point_set,
    projection,
)
from .serialize import (
    boundary_from_doc,
    boundary_to_doc,
    decomposition_to_doc,
    dumps,
    format_rational,
    function_values_from_doc,
    function_values_to_doc,
    geodesic_to_doc,
    loads,
    matrix_from_doc,
    matrix_to_doc,
    parse_rational,
    partition_to_doc,
    point_set_from_doc,
    point_set_to_doc,
)

__version__ = "0.1.0"

__all__ = [
    "AxisOutOfRangeError",
    "BoundarySet",
    "CheckReport",
    "CoordinateLabel",
    "DEFAULT_CAP",
    "Decomposition",
    "DependenceCertificate",
    "DimensionMismatchError",
    "DuplicatePointError",
    "EmptySetError",
    "EmptySymbolError",
    "FamilyInstance",
    "FamilyTooSmallError",
    "GeodesicResult",
    "GoodSetError",
    "GoodnessReport",
    "IncidenceSystem",
    "Matrix",
    "MissingBoundaryValueError",
    "NegativeIndexError",
    "NotABoundaryError",
    "NotGoodError",
    "NotSquareError",
    "ParseError",
    "Partition",
    "Point",
    "PointNotInSetError",
    "PointSet",
    "ReducedIncidence",
    "RowSumBoundFit",
    "SetTooLargeError",
    "ShapeMismatchError",
    "UnknownCoordinateError",
    "VerificationFailedError",
    "abs_row_sums",
    "analyze_goodness",
    "boundary_from_doc",
    "boundary_to_doc",
    "build_incidence",
    "coordinate_labels",
    "decompose",
    "decomposition_to_doc",
    "dumps",
    "enumerate_full_subset_indices",
    "enumerate_full_subsets",
    "family",
    "find_boundary",
    "format_rational",
    "full_components",
    "function_values_from_doc",
    "function_values_to_doc",
    "geodesic",
    "geodesic_to_doc",
    "invert",
    "is_boundary",
    "is_full",
    "is_good",
    "kernel_basis",
    "loads",
    "matrix_from_doc",
    "matrix_to_doc",
    "parse_rational",
    "partition_to_doc",
    "point_set",
    "point_set_from_doc",
    "point_set_to_doc",
    "projection",
    "rank",
    "reduced_incidence",
    "related_components",
    "row_sum_bound_report",
    "row_sums",
    "rref",
    "solve",
    "verify_block_properties",
    "verify_full_via_inverse",
    "verify_geodesic",
    "verify_no_full_subsets",
    "verify_prefix_boundary",
]
