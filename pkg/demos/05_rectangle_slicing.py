"""
Slicing axis parallel rectangles
================================

Given rectangles in the plane, a slicing is a set of full lines that
cuts every rectangle.  The number of lines needed is controlled by the
largest pairwise disjoint subfamily.
"""

from fractions import Fraction

from permclass.rectangles import (
    all_sliced,
    independence_number,
    rect,
    slice_rectangles,
    slicing_bound,
)

# a small family: two overlapping pairs and one far away
rects = [
    rect(0, 4, 0, 2),
    rect(1, 3, 1, 5),
    rect(6, 9, 0, 1),
    rect(7, 8, 3, 6),
    rect(Fraction(13, 2), 10, 4, 5),
]

lines = slice_rectangles(rects)
print(f"{len(rects)} rectangles sliced by {len(lines)} lines")
for ln in lines:
    print(f"  {ln.orientation} at {ln.coordinate}")
print("every rectangle cut:", all_sliced(rects, lines))

# the guarantee is in terms of the independence number: the largest
# set of rectangles no two of which overlap
k = independence_number(rects)
print()
print("independence number:", k)
print("guaranteed line budget for that number:", slicing_bound(k))
print("within budget:", len(lines) <= slicing_bound(k))

# disjoint rectangles are the worst case for the bound's shape: each
# one forces its own cuts
row = [rect(3 * i, 3 * i + 1, 0, 1) for i in range(6)]
lines = slice_rectangles(row)
print()
print("6 disjoint rectangles:", len(lines), "lines,",
      "budget", slicing_bound(independence_number(row)))
assert all_sliced(row, lines)
