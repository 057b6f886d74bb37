"""
Three ways to count leaves
==========================

The simulator walks the tree, the formula engine uses recurrences and
closed forms, and the series engine reads coefficients of generating
functions.  They agree on every level.
"""

from woctree import formula_tally, resolve_condition, series_tally, sim_tally

p = resolve_condition("mixed123")      # x_i <= x_j < x_k
n_max = 8

sim = sim_tally(p, n_max)
formula = formula_tally(p, n_max)
series = series_tally(p, n_max)

print("n        a    delta        b        w")
for row in sim.rows():
    print("%d %8d %8d %8d %8d" % row)

print()
print("formula engine agrees:", formula == sim)
print("series engine agrees: ", series == sim)

# the formula engine alone goes much further
big = formula_tally(p, 40)
print("w_40 =", big.w[-1])
