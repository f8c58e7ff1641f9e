"""
Grid classes and griddability
=============================

A grid matrix assigns a permutation class to each cell.  A permutation
lies in the grid class when its points can be partitioned so that each
part, read in its cell, belongs to the cell class.
"""

from permclass.grid import (
    av_cell,
    enumerate_gridded,
    find_gridding,
    format_matrix,
    grid_members,
    is_D_griddable,
    parse_matrix,
    sumcl_cell,
)
from permclass.perm import format_perm, parse_perm

# two stacked increasing cells: the layered column
m = parse_matrix("inc\ninc")
print("matrix:")
print(format_matrix(m))

# find_gridding recovers a witness partition or None
p = parse_perm("346125")
g = find_gridding(p, m)
print(f"gridding of {format_perm(p)}:", g)
print("not griddable:", find_gridding(parse_perm("21"), parse_matrix("inc")))

# counting members of the grid class, then counting gridded objects
# (member, witness) where the same member can carry several witnesses
mem = [len(s) for s in grid_members(m, 8)]
print()
print("members per length:", mem)
print("gridded objects:   ", enumerate_gridded(m, 8))

# a mixed matrix: one cell holds a sum closure, one an avoidance class
mixed = parse_matrix("sumcl(21), av(21)")
print()
print(format_matrix(mixed))
print("members per length:", [len(s) for s in grid_members(mixed, 7)])

# griddability against a finite set of obstructions: the report names
# the obstruction and the closure direction that fails
rep = is_D_griddable(av_cell("123"), [parse_perm("12"), parse_perm("21")])
print()
print("Av(123) monotone griddable:", rep.griddable)

rep = is_D_griddable(sumcl_cell("25314"), [parse_perm("25314")])
print("sum closure of 25314 griddable by its own generator:", rep.griddable)
print("  blocked in direction", repr(rep.direction), "by", format_perm(rep.witness))
