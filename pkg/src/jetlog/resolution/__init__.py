from ..jets import PairSpec
from .data import Divisor, ResolutionData, parse_subset_key, subset_key
from .integrals import (
    enumerate_M,
    integrate,
    level_set_integral,
    measure_level_set,
    s_dim,
    s_element,
)
from .theorem import main_theorem_check, pivot_bound, required_cells
from .thresholds import deciding_divisors, is_klt, is_lc, klt_margin, lct
from .transform import downstairs_measure, transformation_check, upstairs_measure

__all__ = [
    "Divisor",
    "PairSpec",
    "ResolutionData",
    "deciding_divisors",
    "downstairs_measure",
    "enumerate_M",
    "integrate",
    "is_klt",
    "is_lc",
    "klt_margin",
    "lct",
    "level_set_integral",
    "main_theorem_check",
    "measure_level_set",
    "parse_subset_key",
    "pivot_bound",
    "required_cells",
    "s_dim",
    "s_element",
    "subset_key",
    "transformation_check",
    "upstairs_measure",
]
