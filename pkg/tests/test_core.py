"""Unit and property tests for the single-cell counting primitives."""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballseq.core import (
    Constraint,
    FeasibilityReport,
    SequenceClass,
    binomial,
    doubly_surjective_count,
    falling_factorial,
    feasibility,
    z_count,
)

small = st.integers(min_value=0, max_value=30)


# ---------------------------------------------------------------- binomial

def test_binomial_known_values():
    assert binomial(5, 2) == 10
    assert binomial(4, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1


def test_binomial_total_outside_range():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 1) == 0


def test_binomial_rejects_negative_a():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(a=small, b=st.integers(min_value=-5, max_value=35))
def test_binomial_matches_factorial_definition(a, b):
    if 0 <= b <= a:
        expected = math.factorial(a) // (math.factorial(b) * math.factorial(a - b))
    else:
        expected = 0
    assert binomial(a, b) == expected


@given(a=st.integers(min_value=1, max_value=30), b=st.integers(min_value=0, max_value=30))
def test_binomial_pascal_rule(a, b):
    assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


@given(a=small)
def test_binomial_row_sums_to_power_of_two(a):
    assert sum(binomial(a, b) for b in range(a + 1)) == 2**a


# ------------------------------------------------------- falling factorial

def test_falling_factorial_known_values():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(2, 4) == 0
    assert falling_factorial(0, 0) == 1


def test_falling_factorial_rejects_negatives():
    with pytest.raises(ValueError):
        falling_factorial(-1, 2)
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


@given(a=small, t=small)
def test_falling_factorial_counts_injections(a, t):
    assert falling_factorial(a, t) == binomial(a, t) * math.factorial(t)


@given(a=st.integers(min_value=1, max_value=30), t=st.integers(min_value=1, max_value=30))
def test_falling_factorial_peels_one_term(a, t):
    assert falling_factorial(a, t) == a * falling_factorial(a - 1, t - 1)


# ---------------------------------------------- doubly-surjective counting

def _brute_force_assignments(m, lam):
    """Count functions [m] -> [lam] hitting every image point twice or more,
    by enumerating all lam^m of them."""
    total = 0
    for f in itertools.product(range(lam), repeat=m):
        hits = [0] * lam
        for v in f:
            hits[v] += 1
        if all(h >= 2 for h in hits):
            total += 1
    return total


def test_doubly_surjective_known_values():
    assert doubly_surjective_count(0, 0) == 1
    assert doubly_surjective_count(2, 1) == 1
    assert doubly_surjective_count(4, 2) == 6
    assert doubly_surjective_count(5, 2) == 20
    assert doubly_surjective_count(3, 2) == 0


def test_doubly_surjective_rejects_negatives():
    with pytest.raises(ValueError):
        doubly_surjective_count(-1, 0)
    with pytest.raises(ValueError):
        doubly_surjective_count(0, -1)


def test_doubly_surjective_matches_brute_force_small():
    for m in range(8):
        for lam in range(4):
            assert doubly_surjective_count(m, lam) == _brute_force_assignments(m, lam), (m, lam)


@given(m=st.integers(min_value=1, max_value=40))
def test_doubly_surjective_zero_colors(m):
    assert doubly_surjective_count(m, 0) == 0


@given(m=st.integers(min_value=2, max_value=40))
def test_doubly_surjective_one_color(m):
    assert doubly_surjective_count(m, 1) == 1


@given(m=st.integers(min_value=0, max_value=40), lam=st.integers(min_value=0, max_value=40))
def test_doubly_surjective_vanishes_when_colors_outnumber_pairs(m, lam):
    if 2 * lam > m:
        assert doubly_surjective_count(m, lam) == 0


@given(m=st.integers(min_value=0, max_value=60), lam=st.integers(min_value=0, max_value=30))
def test_doubly_surjective_never_negative(m, lam):
    assert doubly_surjective_count(m, lam) >= 0


def test_doubly_surjective_splits_off_last_color():
    # Classify by the size j >= 2 of the last color's preimage:
    # s(m, lam) = sum_j C(m, j) * s(m - j, lam - 1).
    for m in range(2, 16):
        for lam in range(1, m // 2 + 1):
            recursed = sum(
                binomial(m, j) * doubly_surjective_count(m - j, lam - 1)
                for j in range(2, m + 1)
            )
            assert doubly_surjective_count(m, lam) == recursed


# ------------------------------------------------------------- SequenceClass

def test_sequence_class_rejects_negative_fields():
    with pytest.raises(ValueError):
        SequenceClass(-1, 2, 0, 0)
    with pytest.raises(ValueError):
        SequenceClass(2, -1, 0, 0)
    with pytest.raises(ValueError):
        SequenceClass(2, 2, -1, 0)
    with pytest.raises(ValueError):
        SequenceClass(2, 2, 0, -1)


def test_sequence_class_rejects_non_integers():
    with pytest.raises(ValueError):
        SequenceClass(2.0, 2, 0, 0)
    with pytest.raises(ValueError):
        SequenceClass(2, "3", 0, 0)


def test_sequence_class_is_frozen():
    cell = SequenceClass(2, 2, 2, 1)
    with pytest.raises(AttributeError):
        cell.k = 3


# --------------------------------------------------------------- feasibility

def test_feasible_worked_example_cell():
    report = feasibility(SequenceClass(5, 3, 4, 2))
    assert report.feasible
    assert report.violated_constraints == ()


def test_single_match_is_infeasible():
    report = feasibility(SequenceClass(5, 3, 1, 0))
    assert not report.feasible
    # m = 1 is impossible outright, and 1 < k - n + 1 = 3 matches too few.
    assert Constraint.EXACTLY_ONE_MATCH in report.violated_constraints
    assert Constraint.MATCH_FLOOR in report.violated_constraints
    # The slack bound 0 > n - k + m = -1 fires here as well; every violated
    # constraint is reported, not a curated subset.
    assert set(report.violated_constraints) == {
        Constraint.MATCH_FLOOR,
        Constraint.LAMBDA_VS_SLACK,
        Constraint.EXACTLY_ONE_MATCH,
    }


def test_too_many_repeated_colors_is_infeasible():
    report = feasibility(SequenceClass(4, 10, 4, 3))
    assert not report.feasible
    assert report.violated_constraints == (Constraint.LAMBDA_VS_HALF_M,)


def test_constraints_fire_alone_where_possible():
    cases = {
        Constraint.MATCH_FLOOR: SequenceClass(5, 3, 2, 0),
        Constraint.LAMBDA_VS_HALF_M: SequenceClass(4, 10, 4, 3),
        Constraint.LAMBDA_VS_SLACK: SequenceClass(5, 2, 4, 2),
        Constraint.EXACTLY_ONE_MATCH: SequenceClass(1, 3, 1, 0),
    }
    for constraint, cell in cases.items():
        report = feasibility(cell)
        assert report.violated_constraints == (constraint,), constraint


def test_zero_match_shape_always_has_company():
    # m = 0 with lam != 0 also breaks the half-m bound, and m = 0 with
    # k > n also breaks the match floor, so this constraint never fires
    # alone; check both branches fire it at all.
    for cell in (SequenceClass(2, 5, 0, 1), SequenceClass(6, 3, 0, 0)):
        report = feasibility(cell)
        assert Constraint.ZERO_MATCH_SHAPE in report.violated_constraints
        assert len(report.violated_constraints) >= 2


def test_report_consistency_is_enforced():
    with pytest.raises(ValueError):
        FeasibilityReport(True, (Constraint.EXACTLY_ONE_MATCH,))
    with pytest.raises(ValueError):
        FeasibilityReport(False, ())


@given(k=small, n=small, m=small, lam=small)
def test_feasible_iff_no_violations(k, n, m, lam):
    report = feasibility(SequenceClass(k, n, m, lam))
    assert report.feasible == (len(report.violated_constraints) == 0)


# ------------------------------------------------------------------- z_count

def test_z_count_known_values():
    assert z_count(SequenceClass(5, 3, 4, 1)) == 30
    assert z_count(SequenceClass(5, 3, 4, 2)) == 90
    assert z_count(SequenceClass(2, 2, 2, 1)) == 2
    assert z_count(SequenceClass(3, 5, 0, 0)) == 60
    assert z_count(SequenceClass(7, 2, 1, 0)) == 0


def test_z_count_empty_sequence():
    for n in range(6):
        assert z_count(SequenceClass(0, n, 0, 0)) == 1


def test_z_count_no_matches_counts_injections():
    # The m = 0 column is the injective colorings: n falling k of them.
    for n in range(8):
        for k in range(8):
            expected = falling_factorial(n, k) if k <= n else 0
            assert z_count(SequenceClass(k, n, 0, 0)) == expected


@given(k=small, n=small, m=small, lam=small)
def test_z_count_zero_on_infeasible(k, n, m, lam):
    cell = SequenceClass(k, n, m, lam)
    if not feasibility(cell).feasible:
        assert z_count(cell) == 0


@given(k=small, n=small, m=small, lam=small)
def test_z_count_never_negative(k, n, m, lam):
    assert z_count(SequenceClass(k, n, m, lam)) >= 0


def test_total_mass_small_grid():
    for k in range(11):
        for n in range(11):
            total = sum(
                z_count(SequenceClass(k, n, m, lam))
                for m in range(k + 1)
                for lam in range(m // 2 + 1)
            )
            assert total == n**k, (k, n)


def test_z_count_pure_across_repeats_and_threads():
    cells = [
        SequenceClass(k, n, m, lam)
        for k in range(9)
        for n in range(9)
        for m in range(k + 1)
        for lam in range(m // 2 + 1)
    ]
    sequential = [z_count(c) for c in cells]
    assert sequential == [z_count(c) for c in cells]
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(z_count, cells))
    assert threaded == sequential
