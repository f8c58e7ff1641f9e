"""
Finite-basis permutation classes and explicit downsets.

A class Av(B) is the set of permutations containing no element of the basis
B.  Enumeration works by inserting a new maximum into every slot of every
shorter member, which is complete because deleting the maximum entry of a
member yields a member.  Downsets are materialized as explicit sets of
permutations up to a length bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .perm import (
    Perm,
    all_symmetries,
    contains,
    is_simple,
    is_sum_indecomposable,
    direct_sum,
    parse_perm,
    standardize,
    sum_decomposition,
)


@dataclass(frozen=True)
class AvClass:
    """A class given by its finite basis; an empty basis means all perms."""

    basis: tuple[Perm, ...]

    @property
    def is_all(self) -> bool:
        return not self.basis

    def __str__(self) -> str:
        from .perm import format_perm

        if self.is_all:
            return "Av()"
        return "Av(" + ", ".join(format_perm(b) for b in self.basis) + ")"


def normalize_basis(raw: Iterable[Perm]) -> AvClass:
    """
    Drop every element that contains another; the survivors form an
    antichain defining the same class, sorted for determinism.

    >>> normalize_basis([(2, 1), (3, 2, 1)]).basis
    ((2, 1),)
    >>> normalize_basis([(1,)]).basis
    ((1,),)
    """
    elems = set(raw)
    if not elems:
        raise ValueError("empty basis: the class of all permutations")
    kept = [
        p
        for p in elems
        if not any(q != p and contains(q, p) for q in elems)
    ]
    return AvClass(tuple(sorted(kept, key=lambda p: (len(p), p))))


def av(*texts: str) -> AvClass:
    """
    Shorthand: build a class from permutation texts.

    >>> str(av("321", "2341", "3412", "4123"))
    'Av(321, 2341, 3412, 4123)'
    """
    return normalize_basis([parse_perm(t) for t in texts])


def parse_basis(text: str) -> AvClass:
    """
    Basis file format: one permutation per line, blank lines and `#` comments
    ignored.

    >>> parse_basis("321\\n# comment\\n\\n2341").basis
    ((3, 2, 1), (2, 3, 4, 1))
    """
    perms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            perms.append(parse_perm(line))
    return normalize_basis(perms)


def avoids(p: Perm, cls: AvClass) -> bool:
    """
    True iff no basis element embeds in p.

    >>> avoids((1, 2, 3), av("21"))
    True
    >>> avoids(parse_perm("391867452"), av("51342"))
    False
    >>> avoids((), av("21"))
    True
    """
    return not any(contains(b, p) for b in cls.basis)


def enumerate_class(
    cls: AvClass, nmax: int
) -> tuple[list[int], list[list[Perm]]]:
    """
    Counts and members of Av(B) for lengths 0..nmax.

    >>> counts, _ = enumerate_class(av("12"), 5)
    >>> counts
    [1, 1, 1, 1, 1, 1]
    >>> enumerate_class(av("12", "21"), 3)[0]
    [1, 1, 0, 0]
    """
    if cls.is_all:
        raise ValueError("refusing to enumerate the class of all permutations")
    members: list[list[Perm]] = []
    layer = [()] if avoids((), cls) else []
    members.append(layer)
    for n in range(1, nmax + 1):
        nxt = []
        for q in members[n - 1]:
            for slot in range(n):
                cand = q[:slot] + (n,) + q[slot:]
                if avoids(cand, cls):
                    nxt.append(cand)
        members.append(nxt)
    return [len(layer) for layer in members], members


def closure(gens: Iterable[Perm]) -> set[Perm]:
    """
    Every permutation contained in some generator, the empty one included.

    >>> sorted(closure([(2, 1)]), key=len)
    [(), (1,), (2, 1)]
    >>> len(closure([(2, 4, 1, 3)]))
    9
    """
    out: set[Perm] = set(standardize(g) for g in gens)
    frontier = set(out)
    while frontier:
        nxt: set[Perm] = set()
        for p in frontier:
            for i in range(len(p)):
                q = standardize(p[:i] + p[i + 1 :])
                if q not in out:
                    out.add(q)
                    nxt.add(q)
        frontier = nxt
    return out


def downset_members(
    source: AvClass | Iterable[Perm], nmax: int
) -> list[list[Perm]]:
    # Members by length 0..nmax from either a basis or an explicit downset.
    if isinstance(source, AvClass):
        return enumerate_class(source, nmax)[1]
    by_len: list[list[Perm]] = [[] for _ in range(nmax + 1)]
    for p in source:
        if len(p) <= nmax:
            by_len[len(p)].append(p)
    return by_len


def sum_indecomposables_in(
    source: AvClass | Iterable[Perm], nmax: int
) -> list[int]:
    """
    Counts, by length 0..nmax, of the sum-indecomposable members.  Index 0
    is always 0: the empty permutation is not counted here.

    >>> sum_indecomposables_in(closure([parse_perm("251364")]), 6)
    [0, 1, 1, 2, 3, 3, 1]
    >>> sum_indecomposables_in(closure([(1, 4, 3, 2)]), 4)
    [0, 1, 1, 1, 0]
    >>> sum_indecomposables_in(closure([(1, 2)]), 2)
    [0, 1, 0]
    """
    by_len = downset_members(source, nmax)
    return [0] + [
        sum(1 for p in by_len[n] if is_sum_indecomposable(p))
        for n in range(1, nmax + 1)
    ]


def sum_closure_counts(gens: Iterable[Perm], nmax: int) -> list[int]:
    """
    Counts of the smallest sum-closed class containing the closure of gens.

    Every member splits uniquely into sum-indecomposable blocks from the
    closure, so the counts follow from those block counts by a composition
    (convolution) recurrence.

    >>> sum_closure_counts([(1, 4, 3, 2)], 8)
    [1, 1, 2, 4, 7, 13, 24, 44, 81]
    >>> sum_closure_counts([(1,)], 5)
    [1, 1, 1, 1, 1, 1]
    """
    down = closure(gens)
    blocks = sum_indecomposables_in(down, nmax)
    counts = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        counts[n] = sum(blocks[k] * counts[n - k] for k in range(1, n + 1))
    return counts


def sum_closure_members(gens: Iterable[Perm], nmax: int) -> list[set[Perm]]:
    """
    The same class materialized: members by length, built by summing an
    indecomposable first block with every shorter member.

    >>> [len(s) for s in sum_closure_members([(1, 4, 3, 2)], 6)]
    [1, 1, 2, 4, 7, 13, 24]
    """
    down = closure(gens)
    blocks: list[list[Perm]] = [[] for _ in range(nmax + 1)]
    for p in down:
        if 1 <= len(p) <= nmax and is_sum_indecomposable(p):
            blocks[len(p)].append(p)
    out: list[set[Perm]] = [set() for _ in range(nmax + 1)]
    out[0].add(())
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            for head in blocks[k]:
                for tail in out[n - k]:
                    out[n].add(direct_sum(head, tail))
    return out


def is_antichain(perms: Iterable[Perm]) -> bool:
    """
    True iff the permutations are pairwise incomparable.

    >>> is_antichain([(1,), (1, 2)])
    False
    >>> is_antichain([(2, 3, 1), (3, 1, 2)])
    True
    """
    elems = list(perms)
    for i, p in enumerate(elems):
        for q in elems[i + 1 :]:
            if contains(p, q) or contains(q, p):
                return False
    return True


def simple_subperms(p: Perm) -> set[Perm]:
    """
    All simple permutations contained in p (lengths >= 1).

    >>> sorted(simple_subperms((1, 4, 3, 2)), key=len)
    [(1,), (1, 2), (2, 1)]
    """
    return {q for q in closure([p]) if q and is_simple(q)}


def in_wreath_closure(p: Perm, simple_oracle: Callable[[Perm], bool]) -> bool:
    """
    Membership in the wreath closure of a class known only through its
    simple permutations: p belongs iff every simple permutation inside p
    does.

    >>> from .perm import parse_perm
    >>> in_wreath_closure(parse_perm("1432"), lambda q: len(q) <= 3)
    True
    >>> in_wreath_closure(parse_perm("25314"), lambda q: len(q) <= 3)
    False
    """
    return all(simple_oracle(q) for q in simple_subperms(p))
