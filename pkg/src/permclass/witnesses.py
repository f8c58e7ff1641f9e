"""
Witness families: oscillations and their closures, the basis of the wreath
closure of the oscillations, the infinite antichain u_1, u_2, ..., and the
alternation families that certify growth-rate lower bounds.

The increasing oscillating sequence is 4, 1, 6, 3, 8, 5, ..., 2k+2, 2k-1, ...
An increasing oscillation is a sum-indecomposable pattern of it; a decreasing
oscillation is the reverse of one.  O is the closure of all oscillations,
O_k of those with length at most k.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools

from .classes import av, avoids, in_wreath_closure
from .perm import (
    Perm,
    SYMMETRY_NAMES,
    all_symmetries,
    contains,
    is_sum_indecomposable,
    reverse,
    standardize,
    symmetry,
)

# Av(321, 2341, 3412, 4123) is the closure of the increasing oscillating
# sequence; O adds the reflection of that class.
OSC_CLOSURE_BASIS = av("321", "2341", "3412", "4123")

WO_BASIS_CORE: tuple[Perm, ...] = (
    (2, 5, 3, 1, 4),
    (4, 1, 3, 5, 2),
    (2, 4, 6, 1, 5, 3),
    (2, 5, 1, 3, 6, 4),
    (3, 1, 4, 6, 2, 5),
    (3, 5, 1, 6, 2, 4),
    (4, 1, 5, 2, 6, 3),
)

ALTERNATION_FAMILIES = (
    "parallel",
    "wedge",
    "three_one",
    "linear_triple",
    "hook_triple",
    "u_antichain",
)


def increasing_oscillating_prefix(n: int) -> Perm:
    """
    The pattern of the first n terms of 4, 1, 6, 3, 8, 5, ...

    >>> increasing_oscillating_prefix(4)
    (3, 1, 4, 2)
    >>> increasing_oscillating_prefix(1)
    (1,)
    >>> increasing_oscillating_prefix(6)
    (3, 1, 5, 2, 6, 4)
    """
    if n < 1:
        raise ValueError("need n >= 1")
    vals: list[int] = []
    k = 1
    while len(vals) < n:
        vals += [2 * k + 2, 2 * k - 1]
        k += 1
    return standardize(vals[:n])


@functools.lru_cache(maxsize=None)
def increasing_oscillations(k: int) -> tuple[Perm, ...]:
    """
    The increasing oscillations of length k in lexicographic order: the
    sum-indecomposable length-k patterns of the oscillating sequence.
    There is one for k <= 2 and two for every k >= 3.

    >>> increasing_oscillations(2)
    ((2, 1),)
    >>> increasing_oscillations(3)
    ((2, 3, 1), (3, 1, 2))
    >>> increasing_oscillations(4)
    ((2, 4, 1, 3), (3, 1, 4, 2))
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return ((1,),)
    # A window a few terms longer than k already exhibits every length-k
    # oscillation.
    host = increasing_oscillating_prefix(k + 6)
    found = {
        q
        for sub in itertools.combinations(host, k)
        if is_sum_indecomposable(q := standardize(sub))
    }
    return tuple(sorted(found))


def oscillations(k: int) -> set[Perm]:
    """
    Increasing and decreasing oscillations of length k.

    >>> oscillations(2) == {(2, 1), (1, 2)}
    True
    >>> sorted(oscillations(3))
    [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    """
    inc = increasing_oscillations(k)
    return set(inc) | {reverse(p) for p in inc}


@dataclasses.dataclass(frozen=True)
class OscillationSpec:
    """
    One oscillation, named by direction, length, and which of the (at most
    two) oscillations of that length; variants are in lexicographic order
    of the increasing form.

    >>> OscillationSpec("increasing", 4, 1).build()
    (3, 1, 4, 2)
    >>> OscillationSpec("decreasing", 3, 0).build()
    (1, 3, 2)
    """

    direction: str
    length: int
    variant: int = 0

    def __post_init__(self) -> None:
        if self.direction not in ("increasing", "decreasing"):
            raise ValueError(f"bad direction {self.direction!r}")
        if self.length < 1:
            raise ValueError("need length >= 1")
        count = 1 if self.length <= 2 else 2
        if not 0 <= self.variant < count:
            raise ValueError(f"length {self.length} has {count} variant(s)")

    def build(self) -> Perm:
        p = increasing_oscillations(self.length)[self.variant]
        return reverse(p) if self.direction == "decreasing" else p


def in_O(p: Perm) -> bool:
    """
    Membership in the closure of all oscillations: p or its reverse avoids
    {321, 2341, 3412, 4123}.

    >>> in_O((1, 4, 3, 2))
    False
    >>> in_O((3, 1, 4, 2))
    True
    >>> in_O((1,)) and in_O(())
    True
    """
    return avoids(p, OSC_CLOSURE_BASIS) or avoids(reverse(p), OSC_CLOSURE_BASIS)


def in_O_k(p: Perm, k: int) -> bool:
    """
    Membership in the closure of the oscillations of length at most k.

    >>> in_O_k((2, 1), 2)
    True
    >>> in_O_k((3, 1, 4, 2), 3)
    False
    """
    if len(p) == 0:
        return True
    if len(p) > k:
        return False
    return any(
        contains(p, host)
        for j in range(len(p), k + 1)
        for host in oscillations(j)
    )


@functools.lru_cache(maxsize=None)
def basis_WO() -> frozenset[Perm]:
    """
    The basis of the wreath closure of O: seven simple permutations closed
    under the eight symmetries.

    >>> (2, 5, 3, 1, 4) in basis_WO() and (4, 1, 5, 2, 6, 3) in basis_WO()
    True
    >>> sorted(len(b) for b in basis_WO())[:3]
    [5, 5, 6]
    """
    out: set[Perm] = set()
    for core in WO_BASIS_CORE:
        out |= all_symmetries(core)
    return frozenset(out)


def in_WO(p: Perm) -> bool:
    """
    Membership in the wreath closure of O, decided by avoidance of the
    finite basis; at small lengths the answer is cross-checked against the
    definition, every simple permutation inside p lying in O.

    >>> in_WO((1, 4, 3, 2))
    True
    >>> in_WO((2, 5, 3, 1, 4))
    False
    """
    fast = all(not contains(b, p) for b in basis_WO())
    if len(p) <= 8:
        assert fast == in_wreath_closure(p, in_O)
    return fast


def u_antichain(m: int) -> Perm:
    """
    The m-th member of the antichain 2351674, 235174896, ...; length 2m+5.

    >>> u_antichain(1)
    (2, 3, 5, 1, 6, 7, 4)
    >>> u_antichain(2)
    (2, 3, 5, 1, 7, 4, 8, 9, 6)
    >>> len(u_antichain(10))
    25
    """
    if m < 1:
        raise ValueError("need m >= 1")
    vals = [2, 3, 5, 1]
    for j in range(1, m):
        vals += [2 * j + 5, 2 * j + 2]
    vals += [2 * m + 4, 2 * m + 5, 2 * m + 2]
    return tuple(vals)


def alternation(family: str, m: int, sym: str = "id") -> Perm:
    """
    Canonical member of a witness family, with a symmetry applied on top.

    parallel(m), length 2m: evens increasing then odds increasing, simple
    for m >= 2.  wedge(m), length 2m: odds increasing then evens decreasing.
    three_one(m), length 3m: m descending pairs stacked increasingly, then
    m increasing separators.  linear_triple(m), length 3m: three increasing
    runs interleaved in value.  hook_triple(m), length 3m: alternating
    bottom run and top run, then an increasing right arm below the tops.

    >>> alternation("parallel", 3)
    (2, 4, 6, 1, 3, 5)
    >>> alternation("wedge", 2)
    (1, 3, 4, 2)
    >>> alternation("three_one", 2)
    (2, 1, 5, 4, 3, 6)
    >>> alternation("linear_triple", 2)
    (1, 4, 2, 5, 3, 6)
    >>> alternation("hook_triple", 2)
    (1, 5, 3, 6, 2, 4)
    >>> alternation("parallel", 2, "complement")
    (3, 1, 4, 2)
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if family == "parallel":
        vals = list(range(2, 2 * m + 1, 2)) + list(range(1, 2 * m, 2))
    elif family == "wedge":
        vals = list(range(1, 2 * m, 2)) + list(range(2 * m, 1, -2))
    elif family == "three_one":
        vals = []
        for i in range(1, m + 1):
            vals += [3 * i - 1, 3 * i - 2]
        vals += [3 * i for i in range(1, m + 1)]
    elif family == "linear_triple":
        vals = (
            list(range(1, 3 * m, 3))
            + list(range(2, 3 * m + 1, 3))
            + list(range(3, 3 * m + 1, 3))
        )
    elif family == "hook_triple":
        vals = []
        for i in range(1, m + 1):
            vals += [2 * i - 1, 2 * m + i]
        vals += list(range(2, 2 * m + 1, 2))
    elif family == "u_antichain":
        vals = list(u_antichain(m))
    else:
        raise ValueError(f"unknown family {family!r}")
    return symmetry(tuple(vals), sym)


@dataclasses.dataclass(frozen=True)
class AlternationSpec:
    """
    One alternation-family member: family name, size parameter, symmetry.

    >>> AlternationSpec("parallel", 2, "complement").build()
    (3, 1, 4, 2)
    """

    family: str
    m: int
    sym: str = "id"

    def __post_init__(self) -> None:
        if self.family not in ALTERNATION_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 1:
            raise ValueError("need m >= 1")
        if self.sym not in SYMMETRY_NAMES:
            raise ValueError(f"unknown symmetry {self.sym!r}")

    def build(self) -> Perm:
        return alternation(self.family, self.m, self.sym)


def is_parallel_alternation(p: Perm) -> bool:
    """
    True iff some single horizontal or vertical cut splits p into two parts
    monotone in the same direction, every same-part pair separated by the
    other part.

    >>> is_parallel_alternation((2, 4, 6, 1, 3, 5))
    True
    >>> is_parallel_alternation((3, 1, 4, 2, 5))
    True
    >>> is_parallel_alternation((1, 3, 4, 2))
    False
    >>> is_parallel_alternation((1, 2, 3))
    False
    """
    n = len(p)
    if n < 2:
        return False
    points = [(i, p[i - 1]) for i in range(1, n + 1)]

    def monotone_same_direction(part_a, part_b) -> bool:
        dirs = []
        for part in (part_a, part_b):
            vals = [v for _, v in sorted(part)]
            inc = all(a < b for a, b in zip(vals, vals[1:]))
            dec = all(a > b for a, b in zip(vals, vals[1:]))
            if not (inc or dec):
                return False
            if len(vals) >= 2:
                dirs.append(inc)
        return len(set(dirs)) <= 1

    def separated(part_a, part_b) -> bool:
        for part, other in ((part_a, part_b), (part_b, part_a)):
            for (i1, v1), (i2, v2) in itertools.combinations(part, 2):
                if not any(
                    min(i1, i2) < i < max(i1, i2) or min(v1, v2) < v < max(v1, v2)
                    for i, v in other
                ):
                    return False
        return True

    def ok(part_a, part_b) -> bool:
        if not part_a or not part_b:
            return False
        return monotone_same_direction(part_a, part_b) and separated(part_a, part_b)

    for cut in range(1, n):
        if ok(points[:cut], points[cut:]):
            return True
        below = [(i, v) for i, v in points if v <= cut]
        above = [(i, v) for i, v in points if v > cut]
        if ok(below, above):
            return True
    return False
