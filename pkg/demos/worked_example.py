#!/usr/bin/env python3
"""
Walk through the five-ball, three-color example cell by cell.

Color 5 ordered balls with 3 colors and ask for exactly 4 matched balls:
4 balls that share their color with some other ball, one ball with a color
of its own.  The count splits by how many distinct colors are repeated.
"""

from ballseq import SequenceClass, enumerate_counts, feasibility, z_count
from ballseq.problems import problem1_matches_fixed_length

k, n, m = 5, 3, 4

print(f"Sequences of {k} balls over {n} colors with exactly {m} matched balls")
print()

# The matched balls spread over lam repeated colors: 1 (one color on all
# four) or 2 (two colors, two balls each).  lam = 0 slips past the
# structural constraint checks but dies in the arithmetic anyway: there is
# no way to assign 4 matched balls to zero repeated colors.
for lam in range(m // 2 + 1):
    cell = SequenceClass(k, n, m, lam)
    report = feasibility(cell)
    names = ", ".join(c.value for c in report.violated_constraints)
    print(f"  lam={lam}: z = {z_count(cell):3d}"
          + (f"  (infeasible: {names})" if names else ""))
print()

# One repeated color: pick it (3 ways), pick the 4 positions it fills
# (5 ways), color the leftover ball with one of the 2 remaining colors:
# 3 * 5 * 2 = 30.  Two repeated colors: pick them (3 ways), pick the 4
# matched positions (5 ways), hand those positions to the two colors with
# both used twice (6 ways), and the leftover ball takes the 1 color left:
# 3 * 5 * 6 = 90.
for lam in (1, 2):
    count = z_count(SequenceClass(k, n, m, lam))
    print(f"  z(k={k}, n={n}, m={m}, lam={lam}) = {count}")

total = problem1_matches_fixed_length(k, n, m)
print(f"  total over lam                = {total}")
assert total == 30 + 90 == 120
print()

# The brute-force oracle reproduces both cells by classifying all 3^5 = 243
# colorings one by one.
table = enumerate_counts(k, n)
print(f"oracle: (m=4, lam=1) -> {table.by_match_cell[4, 1]}")
print(f"oracle: (m=4, lam=2) -> {table.by_match_cell[4, 2]}")
