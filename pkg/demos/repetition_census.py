#!/usr/bin/env python3
"""
Census a whole (k, n) space: every repetition pattern of 6 balls in 4 colors.

The distribution table carries two views of the same 4^6 = 4096 colorings:
by (matched balls, repeated colors) cell, and by repeats-after-first-
occurrence.  Both views sum to 4096.
"""

from ballseq import classify, Coloring, distribution_table

k, n = 6, 4
table = distribution_table(k, n)

print(f"All {n}^{k} = {n**k} colorings of {k} balls in {n} colors")
print()
print("by (m, lam) cell:")
for (m, lam), count in table.by_match_cell.items():
    print(f"  m={m} lam={lam}: {count:5d}")
print(f"  total: {sum(table.by_match_cell.values())}")
print()

print("by repeat count mu (balls whose color already appeared):")
for mu, count in table.by_repeat_count.items():
    print(f"  mu={mu}: {count:5d}")
print(f"  total: {sum(table.by_repeat_count.values())}")
print()

# The two views regroup the same sequences: a coloring with mu repeats and
# lam repeated colors sits in cell (mu + lam, lam).  Check one bucket by
# hand-summing its cells.
mu = 2
regrouped = sum(table.by_match_cell.get((mu + lam, lam), 0) for lam in range(mu + 1))
print(f"mu={mu} bucket from match cells: {regrouped} == {table.by_repeat_count[mu]}")
print()

# classify() reads the statistics off any concrete coloring; the cell it
# lands in is one of the table's.
word = (0, 1, 0, 2, 1, 0)
stats = classify(Coloring(word, n))
print(f"coloring {word}: m={stats.m}, lam={stats.lam}, mu={stats.mu}")
print(f"its cell holds {table.by_match_cell[stats.m, stats.lam]} colorings")
