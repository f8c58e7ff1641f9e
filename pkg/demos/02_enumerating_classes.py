"""
Counting pattern avoiding classes
=================================

An avoidance class is the set of permutations containing none of the
basis patterns.  Enumeration walks the class length by length, pruning
as soon as a basis pattern appears.
"""

from permclass.classes import (
    av,
    closure,
    downset_members,
    enumerate_class,
    sum_closure_counts,
    sum_indecomposables_in,
)
from permclass.perm import format_perm, parse_perm

# Av(321) is counted by the Catalan numbers
counts, members = enumerate_class(av("321"), 8)
print("Av(321) counts:", counts)
print("length 4 members:", " ".join(format_perm(p) for p in members[4]))

# a two element basis thins the class out quickly
counts, _ = enumerate_class(av("321", "3412"), 10)
print("Av(321, 3412) counts:", counts)

# the downward closure of a single permutation is a finite basis story
# in reverse: every subpattern of the generator
gens = [parse_perm("2413")]
pats = closure(gens)
print()
print("patterns inside 2413, by length:")
for n in range(1, 5):
    row = sorted(p for p in pats if len(p) == n)
    print(f"  {n}: {' '.join(format_perm(p) for p in row)}")

# sum closures glue class members corner to corner; their counting
# sequence only depends on how many sum indecomposable patterns the
# generator contains at each length
si = sum_indecomposables_in(closure([parse_perm("1432")]), 4)
print()
print("sum indecomposable patterns of 1432 per length:", si[1:])
print("sum closure counts:", sum_closure_counts([parse_perm("1432")], 12))

# downset_members lists the closure of several generators together
both = downset_members([parse_perm("321"), parse_perm("231")], 3)
print()
print("length 3 patterns of {321, 231}:", " ".join(format_perm(p) for p in sorted(both[3])))
