"""
Newly inactive chains and 213-extensions
========================================

A chain that first contains x_i <= x_j < x_k at level n maps to a
permutation whose reduction avoids 213, with some descents underlined.
Brackets mark the underlined runs.
"""

from collections import Counter

from woctree import StoppingPattern, enumerate_leaves, parse_chain
from woctree.bijections import phi, phi_inverse
from woctree.core import descents

w = parse_chain("x6<x8<x7=x4<x2<x9<x5=x1<x3")
u = phi(w)
print(w, "->", u, "->", phi_inverse(u))

p = StoppingPattern.parse("<=,<")
for n in range(3, 7):
    chains = list(enumerate_leaves(p, n, "inactive_at_n"))
    images = Counter(phi(c).perm for c in chains)
    by_d = Counter(len(descents(q)) for q in images)
    print(f"n={n}: {len(chains)} chains, {len(images)} permutations, by descents {dict(sorted(by_d.items()))}")
