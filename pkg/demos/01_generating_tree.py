"""
Growing the tree of weak-ordering chains
========================================

Every chain on x1..xn has 2*(number of blocks)+1 children: the new
variable goes into a gap between blocks or joins a block.
"""

from woctree import StoppingPattern, contains_pattern, parse_chain

root = parse_chain("x1")
level = [root]
for n in range(2, 4):
    level = [child for chain in level for child in chain.children()]
    print(f"level {n}: {len(level)} chains")
    print("   ", "  ".join(str(c) for c in level))

# a stopping condition freezes a node as soon as the chain contains it
tie = StoppingPattern.parse("=")
print()
print("with the tie condition, level 3 keeps only the chains without '=':")
print("   ", "  ".join(str(c) for c in level if not contains_pattern(c, tie)))
