"""
Pattern containment and substitution decomposition
==================================================

Permutations are tuples of 1..n.  This script walks through the
containment test, the symmetry group, and the decomposition of a
permutation into a simple skeleton with inflated blocks.
"""

from permclass.perm import (
    contains,
    find_embedding,
    format_perm,
    inflate,
    is_simple,
    parse_perm,
    simple_decomposition,
    symmetry,
    SYMMETRY_NAMES,
)

# contains(x, y) asks whether x occurs as a pattern inside y
p = parse_perm("51342")
q = parse_perm("391867452")
print(f"{format_perm(p)} occurs in {format_perm(q)}: {contains(p, q)}")

# find_embedding returns the positions of one occurrence, or None
emb = find_embedding(p, q)
print("one occurrence sits at positions", emb)
print("those entries are", tuple(q[i] for i in emb))

# the eight symmetries of the square act on patterns
print()
print("symmetries of", format_perm(p))
for name in SYMMETRY_NAMES:
    print(f"  {name:>4}: {format_perm(symmetry(p, name))}")

# every permutation is an inflation of a simple permutation
print()
w = parse_perm("453612")
d = simple_decomposition(w)
print("decomposing", format_perm(w))
print("  skeleton  ", format_perm(d.skeleton), "(simple:", str(is_simple(d.skeleton)) + ")")
for block in d.components:
    print("  component ", format_perm(block))

# inflating the skeleton by the components rebuilds the permutation
rebuilt = inflate(d.skeleton, d.components)
print("inflate(skeleton, components) ==", format_perm(rebuilt))
assert rebuilt == w
