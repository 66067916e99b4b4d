"""Persistent cohomology-operation barcodes for Vietoris-Rips filtrations.

F2 persistence, chain-level Steenrod squares, image/kernel barcodes of
cohomology operations, exact bottleneck distances and Gromov-Hausdorff
lower bounds for finite metric spaces.
"""

from .errors import (
    ClosureError,
    DimensionMismatchError,
    DuplicateSimplexError,
    InternalInvariantError,
    MetricError,
    MonotonicityError,
    NotACocycleError,
    ValidationError,
)
from .gf2 import F2Matrix, F2Vector, member, nullspace, quotient_rank, rank
from .simplicial import (
    Cochain,
    FilteredComplex,
    build,
    coboundary,
    coboundary_matrix,
    dump_complex,
    load_complex,
    restrict_cochain,
    rp2_complex,
    sublevel,
    zero_cochain,
)
from .metric import (
    FiniteMetricSpace,
    GroupAction,
    antipodal_action,
    circle_grid,
    gluing_wedge,
    linf_product,
    load_distance_matrix,
    load_points_csv,
    metric_from_points,
    projective_sample,
    quotient_metric,
    save_distance_matrix,
    sphere_sample,
    vr_filtration,
)
from .cohomology import (
    Bar,
    Barcode,
    CohomologyBasis,
    betti_number,
    cohomology_basis,
    persistent_barcode,
)
from .steenrod import cup_i, sq
from .operations import (
    Operation,
    RankFunction,
    homological_radius,
    image_barcode,
    kernel_barcode,
    kernel_rank,
    kernel_rank_function,
    rank_to_barcode,
    theta_radius,
    theta_rank,
    theta_rank_function,
)
from .distances import (
    bottleneck,
    bottleneck_oracle,
    gh_lower_bound,
    stability_check,
)

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "Barcode",
    "Cochain",
    "CohomologyBasis",
    "ClosureError",
    "DimensionMismatchError",
    "DuplicateSimplexError",
    "F2Matrix",
    "F2Vector",
    "FilteredComplex",
    "FiniteMetricSpace",
    "GroupAction",
    "InternalInvariantError",
    "MetricError",
    "MonotonicityError",
    "NotACocycleError",
    "Operation",
    "RankFunction",
    "ValidationError",
    "antipodal_action",
    "betti_number",
    "bottleneck",
    "bottleneck_oracle",
    "build",
    "circle_grid",
    "coboundary",
    "coboundary_matrix",
    "cohomology_basis",
    "cup_i",
    "dump_complex",
    "gh_lower_bound",
    "gluing_wedge",
    "homological_radius",
    "image_barcode",
    "kernel_barcode",
    "kernel_rank",
    "kernel_rank_function",
    "linf_product",
    "load_complex",
    "load_distance_matrix",
    "load_points_csv",
    "member",
    "metric_from_points",
    "nullspace",
    "persistent_barcode",
    "projective_sample",
    "quotient_metric",
    "quotient_rank",
    "rank",
    "rank_to_barcode",
    "restrict_cochain",
    "rp2_complex",
    "save_distance_matrix",
    "sphere_sample",
    "sq",
    "stability_check",
    "sublevel",
    "theta_radius",
    "theta_rank",
    "theta_rank_function",
    "vr_filtration",
    "zero_cochain",
]
