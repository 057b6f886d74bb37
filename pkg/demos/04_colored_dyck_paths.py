"""
Colored Dyck paths and active chains
====================================

Dyck paths whose UDD factors take two colors are in bijection with the
chains that avoid x_i <= x_j <= x_k.
"""

from woctree.bijections import SEC4, iter_colored, prop41_decode, prop41_encode
from woctree.core import parse_chain

for cp in iter_colored(3, SEC4):
    print(f"{str(cp):12s} -> {prop41_decode(cp)}")

# and back again, on a larger chain
chain = parse_chain("x5=x7<x2=x6<x4<x1<x3")
path = prop41_encode(chain)
print()
print(chain, "->", path)
print("round trip ok:", prop41_decode(path) == chain)
