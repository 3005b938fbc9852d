"""Exact counts of color-repetition patterns in sequences of colored balls.

Color k ordered balls from a palette of n colors.  Call a ball *matched*
when its color appears on some other ball, and a color *repeated* when it
colors two or more balls.  This package counts sequences by those
statistics in exact integer arithmetic: single cells, aggregates over one
statistic, aggregates over all lengths, and full distribution tables,
together with a brute-force oracle that re-derives every count by
exhaustive enumeration.
"""

from .core import (
    Constraint,
    Count,
    FeasibilityReport,
    SequenceClass,
    binomial,
    doubly_surjective_count,
    falling_factorial,
    feasibility,
    z_count,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ClassStats,
    Coloring,
    VerificationReport,
    classify,
    enumerate_counts,
    verify,
)
from .problems import (
    DistributionTable,
    distribution_table,
    problem1_matches_fixed_length,
    problem2_matches_any_length,
    problem3_repeats_fixed_length,
    problem4_repeats_any_length,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassStats",
    "Coloring",
    "Constraint",
    "Count",
    "DEFAULT_BUDGET",
    "DistributionTable",
    "FeasibilityReport",
    "SequenceClass",
    "VerificationReport",
    "binomial",
    "classify",
    "distribution_table",
    "doubly_surjective_count",
    "enumerate_counts",
    "falling_factorial",
    "feasibility",
    "problem1_matches_fixed_length",
    "problem2_matches_any_length",
    "problem3_repeats_fixed_length",
    "problem4_repeats_any_length",
    "verify",
    "z_count",
    "__version__",
]
