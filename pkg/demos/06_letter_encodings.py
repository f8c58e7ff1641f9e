"""
Encoding gridded permutations as words
======================================

Members of a nice grid class can be spelled out letter by letter, one
letter per point.  Counting the class then reduces to counting words
in a regular language, which a transfer matrix does exactly.
"""

from permclass.encodings import (
    HOOK_MATRIX,
    PARALLEL_MATRIX,
    count_language,
    decode_parallel,
    encode_parallel,
    parallel_gf,
    three_one_gf,
    three_one_language,
)
from permclass.genfun import pringsheim_growth, series
from permclass.grid import enumerate_gridded
from permclass.perm import format_perm

# two increasing cells side by side: each point is left or right
word = "lrrlr"
p, g = decode_parallel(word)
print(f"word {word!r} decodes to {format_perm(p)} gridded {g}")
print("encoding it back:", encode_parallel(p, g))

# every binary word is a valid code, so the count is 2^n
print()
print("gridded count:", enumerate_gridded(PARALLEL_MATRIX, 8))
print("series of gf: ", series(parallel_gf(), 8))

# a weighted language handles cells whose letters carry multiplicity
lang = three_one_language()
cnt = count_language(lang, 10)
print()
print("weighted word count:", cnt)
print("growth rate:", pringsheim_growth(three_one_gf()).approx_str(6))

# the hook shaped matrix counts by a Fibonacci-like recurrence
print()
print("hook gridded count:", enumerate_gridded(HOOK_MATRIX, 9))
