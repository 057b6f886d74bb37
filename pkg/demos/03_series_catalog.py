"""
Exact power series
==================

Series are truncated at a fixed order and carry rational (or
polynomial-in-y) coefficients.  Nothing is ever rounded.
"""

from fractions import Fraction

from woctree.series import gf, x_series

# the Catalan series, solved from its quadratic with an exact square root
C = gf("C", 10)
print("Catalan:", [int(c) for c in C.coeffs])

# 123-avoiders by size and descents
E = gf("E", 6)
for n in range(1, 7):
    print(f"x^{n}:", [int(E[n][d]) for d in range(n)])

# setting y = 2 weights each descent twice, and the result is a Catalan composition
x = x_series(12)
lhs = gf("E", 12).subs_y(2)
rhs = gf("C", 12).compose(2 * x * (1 - x)).scale(Fraction(1, 2)) - Fraction(1, 2)
print("E(x,2) == C(2x(1-x))/2 - 1/2 :", lhs.agrees_with(rhs, 12))
