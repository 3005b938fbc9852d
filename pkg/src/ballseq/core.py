"""Exact counting of colored-ball sequences by repetition pattern.

A sequence of k balls is colored from a palette of n labeled colors.  Two
statistics summarize how much repetition it contains: m, the number of
balls whose color appears on at least one other ball, and lam, the number
of distinct colors that are used two or more times.  This module evaluates
the closed-form count of sequences in each (k, n, m, lam) cell.

All arithmetic is exact.  Counts are plain Python ints and no float enters
any computation, so results are correct at any magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

Count = int


class Constraint(Enum):
    """Structural reasons a (k, n, m, lam) cell must be empty."""

    MATCH_FLOOR = "MatchFloor"
    LAMBDA_VS_HALF_M = "LambdaVsHalfM"
    LAMBDA_VS_SLACK = "LambdaVsSlack"
    EXACTLY_ONE_MATCH = "ExactlyOneMatch"
    ZERO_MATCH_SHAPE = "ZeroMatchShape"


@dataclass(frozen=True)
class SequenceClass:
    """One counting cell: sequences of ``k`` balls over ``n`` labeled colors
    with exactly ``m`` matched balls and exactly ``lam`` repeated colors.

    A ball is *matched* when some other ball carries the same color; a color
    is *repeated* when it colors at least two balls.
    """

    k: int
    n: int
    m: int
    lam: int

    def __post_init__(self) -> None:
        for name in ("k", "n", "m", "lam"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"{name} must be a non-negative integer, got {value!r}"
                )


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the structural constraint checks for one cell."""

    feasible: bool
    violated_constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        if self.feasible != (len(self.violated_constraints) == 0):
            raise ValueError("feasible must mean exactly zero violations")


def binomial(a: int, b: int) -> Count:
    """Number of b-subsets of an a-set; zero whenever b < 0 or b > a."""
    if a < 0:
        raise ValueError("a must be non-negative")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling_factorial(a: int, t: int) -> Count:
    """Descending product a * (a - 1) * ... * (a - t + 1).

    This is the number of injections from a t-set into an a-set: 1 for the
    empty product t = 0, and 0 as soon as t > a.
    """
    if a < 0 or t < 0:
        raise ValueError("arguments must be non-negative")
    return math.perm(a, t)


@lru_cache(maxsize=None)
def doubly_surjective_count(m: int, lam: int) -> Count:
    """Number of ways to assign m labeled balls to lam labeled colors so
    that every color receives at least two balls.

    Inclusion-exclusion over the colors that end up underfilled:

        sum_{j=0..lam} (-1)^j C(lam, j)
            * sum_{i=0..j} C(j, i) * m!/(m-i)! * (lam - j)^(m - i)

    with 0^0 = 1, so the empty assignment (m = lam = 0) counts once.
    Individual terms are signed but the total is a cardinality; a final
    assertion guards against that ever breaking.
    """
    if m < 0 or lam < 0:
        raise ValueError("arguments must be non-negative")
    total = 0
    for j in range(lam + 1):
        # i > m would need more than m distinguished balls; those terms
        # vanish through the falling factorial, so the range is clipped.
        inner = 0
        for i in range(min(j, m) + 1):
            inner += math.comb(j, i) * math.perm(m, i) * (lam - j) ** (m - i)
        total += (-1) ** j * math.comb(lam, j) * inner
    assert total >= 0, f"assignment count went negative: ({m}, {lam}) -> {total}"
    return total


def feasibility(cell: SequenceClass) -> FeasibilityReport:
    """Check every structural constraint on a cell and report all failures.

    Violation of any constraint forces the cell count to zero.  The
    converse is weaker: a cell can pass every check here and still count
    zero through the arithmetic (m exceeding k, say).
    """
    k, n, m, lam = cell.k, cell.n, cell.m, cell.lam
    violated: list[Constraint] = []
    if k > n and m < k - n + 1:
        # Only n balls can avoid matching, so overflow forces k - n + 1 matches.
        violated.append(Constraint.MATCH_FLOOR)
    if lam > m // 2:
        # Each repeated color consumes at least two matched balls.
        violated.append(Constraint.LAMBDA_VS_HALF_M)
    if lam > n - k + m:
        # k - m unmatched balls need distinct colors outside the lam repeated ones.
        violated.append(Constraint.LAMBDA_VS_SLACK)
    if m == 1:
        # A matched ball needs a partner sharing its color.
        violated.append(Constraint.EXACTLY_ONE_MATCH)
    if m == 0 and (lam != 0 or k > n):
        # No matches means no repeated colors and an injective coloring.
        violated.append(Constraint.ZERO_MATCH_SHAPE)
    return FeasibilityReport(not violated, tuple(violated))


def z_count(cell: SequenceClass) -> Count:
    """Exact number of sequences in one (k, n, m, lam) cell.

    The count factors into independent choices: which lam colors repeat,
    which m positions hold matched balls, an injective coloring of the
    remaining k - m positions from the remaining n - lam colors, and an
    assignment of the matched positions onto the repeated colors giving
    each at least two.  Infeasible cells count zero.
    """
    if not feasibility(cell).feasible:
        return 0
    k, n, m, lam = cell.k, cell.n, cell.m, cell.lam
    if m > k or lam > n:
        return 0
    return (
        binomial(n, lam)
        * binomial(k, m)
        * falling_factorial(n - lam, k - m)
        * doubly_surjective_count(m, lam)
    )
