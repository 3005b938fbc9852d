#!/usr/bin/env python3
"""
Aggregate over all sequence lengths at once.

Fixing the palette but not the length still gives finite counts: only a
bounded window of lengths can realize a given statistic.  With n colors,
exactly m matched balls fit lengths m through m + n - 1, and exactly mu
repeats fit lengths mu + 1 through n + mu.
"""

from ballseq.problems import (
    problem1_matches_fixed_length,
    problem2_matches_any_length,
    problem3_repeats_fixed_length,
    problem4_repeats_any_length,
)

n = 3

# Exactly 4 matched balls, sequences of any length over 3 colors.
m = 4
print(f"exactly {m} matched balls, {n} colors, by length:")
total = 0
for k in range(m, m + n):
    count = problem1_matches_fixed_length(k, n, m)
    total += count
    print(f"  length {k}: {count}")
print(f"  any length: {total} == problem2 = {problem2_matches_any_length(n, m)}")
print()

# Lengths outside the window contribute nothing; the aggregate already has
# every term.
assert problem1_matches_fixed_length(m + n, n, m) == 0
assert problem1_matches_fixed_length(m - 1, n, m) == 0

# Exactly 2 repeats, same palette, via the other statistic.
mu = 2
print(f"exactly {mu} repeats, {n} colors, by length:")
total = 0
for k in range(mu + 1, n + mu + 1):
    count = problem3_repeats_fixed_length(k, n, mu)
    total += count
    print(f"  length {k}: {count}")
print(f"  any length: {total} == problem4 = {problem4_repeats_any_length(n, mu)}")
print()

# mu = 0 means injective sequences; summing lengths 1..n counts all the
# nonempty ways to line up distinct colors: 3 + 6 + 6 = 15 for n = 3.
print(f"injective sequences of any nonzero length: {problem4_repeats_any_length(n, 0)}")
