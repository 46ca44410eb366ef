from ..schemas.report import DimEstimate
from .checks import (
    StratumQuery,
    bundle_ratio_check,
    jet_dimension_table,
    least_squares_slope,
    linear_bound_check,
    stratum_count,
    stratum_dimension,
    stratum_query,
)
from .dimension import balanced_digits, estimate_dimension, interpolate_counts
from .engine import PointCounter, count_points
from .enumerate import enumerate_points
from .query import CountQuery

__all__ = [
    "CountQuery",
    "DimEstimate",
    "PointCounter",
    "StratumQuery",
    "balanced_digits",
    "bundle_ratio_check",
    "count_points",
    "enumerate_points",
    "estimate_dimension",
    "interpolate_counts",
    "jet_dimension_table",
    "least_squares_slope",
    "linear_bound_check",
    "stratum_count",
    "stratum_dimension",
    "stratum_query",
]
