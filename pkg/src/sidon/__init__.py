"""Sidon sets in unions of integer intervals.

Constructions (difference-set translates, quadratic sets, split-and-shift
schemes), exact maximum-subset solvers, window-counting upper bounds, a
doubling-spaced counterexample family, and max-min threshold tuning, with a
CLI for JSON results, CSV sweeps, and figures.
"""

from .core import (
    BITMAP_LIMIT,
    MAX_ELEMENT,
    IntegerSet,
    IntervalUnion,
    PreconditionError,
    ResourceLimitError,
    SidonCheck,
    as_integer_set,
    format_intervals,
    is_sidon,
    membership_bitmap,
    parse_interval,
    parse_intervals,
    parse_set,
)
from .primes import is_prime, largest_prime_at_most
from .fields import CubicExtension, build_extension
from .singer import (
    SingerSystem,
    dense_sidon_in,
    largest_prime_with_q_at_most,
    singer_difference_set,
    singer_family,
    translate_family,
)
from .construct import (
    ConstructionReport,
    TwoIntervalInstance,
    best_construction,
    build_in,
    classify,
    construct_case_i,
    construct_case_ii,
    construct_case_iii_a,
    construct_case_iii_b,
    construct_case_iii_c,
    construct_dense_in_i2,
    normalize_two_intervals,
    split_shift,
)
from .bound import (
    BoundQuery,
    BoundReport,
    bound_given_u,
    bound_optimal_u,
    bound_theorem,
    count_window_pairs,
    hull_bound,
    minimize_remark_beta,
    remark_coefficient,
    windows,
)
from .geometric import GeometricFamily, build_family, first_failing_n, verify_family
from .solver import SolveResult, max_sidon_bb, max_sidon_naive
from .thresholds import (
    ThresholdPoint,
    case_bounds,
    grid_values,
    guarantee_at,
    guarantee_surface,
    optimize_thresholds,
    region_minima,
)
from .report import (
    SweepSpec,
    parse_grid,
    render_surface_figure,
    render_sweep_figure,
    run_sweep,
    synth_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BITMAP_LIMIT",
    "MAX_ELEMENT",
    "IntegerSet",
    "IntervalUnion",
    "PreconditionError",
    "ResourceLimitError",
    "SidonCheck",
    "as_integer_set",
    "format_intervals",
    "is_sidon",
    "membership_bitmap",
    "parse_interval",
    "parse_intervals",
    "parse_set",
    "is_prime",
    "largest_prime_at_most",
    "CubicExtension",
    "build_extension",
    "SingerSystem",
    "dense_sidon_in",
    "largest_prime_with_q_at_most",
    "singer_difference_set",
    "singer_family",
    "translate_family",
    "ConstructionReport",
    "TwoIntervalInstance",
    "best_construction",
    "build_in",
    "classify",
    "construct_case_i",
    "construct_case_ii",
    "construct_case_iii_a",
    "construct_case_iii_b",
    "construct_case_iii_c",
    "construct_dense_in_i2",
    "normalize_two_intervals",
    "split_shift",
    "BoundQuery",
    "BoundReport",
    "bound_given_u",
    "bound_optimal_u",
    "bound_theorem",
    "count_window_pairs",
    "hull_bound",
    "minimize_remark_beta",
    "remark_coefficient",
    "windows",
    "GeometricFamily",
    "build_family",
    "first_failing_n",
    "verify_family",
    "SolveResult",
    "max_sidon_bb",
    "max_sidon_naive",
    "ThresholdPoint",
    "case_bounds",
    "grid_values",
    "guarantee_at",
    "guarantee_surface",
    "optimize_thresholds",
    "region_minima",
    "SweepSpec",
    "parse_grid",
    "render_surface_figure",
    "render_sweep_figure",
    "run_sweep",
    "synth_instance",
]
