"""
Permutations in one-line notation and their structural decompositions.

A permutation of length n is stored as a tuple of the ranks 1..n in one-line
notation, so (4, 7, 9, 8, 3, 2, 1, 5, 6) is the permutation usually written
479832156.  The empty tuple is the empty permutation.  All functions treat
permutations as immutable values; everything here is pure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def is_perm(values: Sequence[int]) -> bool:
    """
    Check that values is a bijection from positions 1..n onto ranks 1..n.

    >>> [is_perm(v) for v in [(), (1,), (2, 1), (1, 1), (2, 3)]]
    [True, True, True, False, False]
    """
    n = len(values)
    seen = [False] * n
    for v in values:
        if not 1 <= v <= n or seen[v - 1]:
            return False
        seen[v - 1] = True
    return True


def perm(values: Iterable[int]) -> Perm:
    """Build a permutation from ranks, validating the bijection."""
    p = tuple(values)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def parse_perm(text: str) -> Perm:
    """
    Parse a permutation from text.

    Two forms are accepted: a compact digit string (usable only when n <= 9),
    or decimal ranks separated by whitespace and/or commas.

    >>> parse_perm("479832156")
    (4, 7, 9, 8, 3, 2, 1, 5, 6)
    >>> parse_perm("4 1 6 3 8 5 10 7 11 9 12 2")
    (4, 1, 6, 3, 8, 5, 10, 7, 11, 9, 12, 2)
    >>> parse_perm("2,4,1,3")
    (2, 4, 1, 3)
    >>> parse_perm("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    if any(c in text for c in " \t,"):
        parts = text.replace(",", " ").split()
        values = [int(p) for p in parts]
    elif text.isdigit():
        values = [int(c) for c in text]
    else:
        raise ValueError(f"cannot parse permutation from {text!r}")
    return perm(values)


def format_perm(p: Perm) -> str:
    """
    One-line text form: compact digits when n <= 9, else space-separated.

    >>> format_perm((4, 7, 9, 8, 3, 2, 1, 5, 6))
    '479832156'
    >>> format_perm((10, 1, 2, 3, 4, 5, 6, 7, 8, 9))
    '10 1 2 3 4 5 6 7 8 9'
    """
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def standardize(values: Sequence[int]) -> Perm:
    """
    The pattern of a sequence of distinct numbers: replace each entry by its
    rank among the entries.

    >>> standardize((9, 1, 6, 7, 2))
    (5, 1, 3, 4, 2)
    >>> standardize(())
    ()
    """
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for rank, idx in enumerate(order, start=1):
        ranks[idx] = rank
    return tuple(ranks)


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of length n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# containment


def _embedding_search(pattern: Perm, target: Perm) -> tuple[int, ...] | None:
    # Backtracking over target positions, left to right along the pattern.
    # For each pattern entry the nearest smaller/larger entries already placed
    # give a value window the next target entry must fall in, so most branches
    # die without scanning the chosen prefix.
    k, n = len(pattern), len(target)
    below = [0] * k  # index of the pattern entry forming the tightest lower bound
    above = [0] * k
    for i in range(k):
        lo = hi = -1
        for j in range(i):
            if pattern[j] < pattern[i] and (lo < 0 or pattern[j] > pattern[lo]):
                lo = j
            if pattern[j] > pattern[i] and (hi < 0 or pattern[j] < pattern[hi]):
                hi = j
        below[i], above[i] = lo, hi

    chosen: list[int] = []

    def extend(i: int, start: int) -> bool:
        if i == k:
            return True
        for pos in range(start, n - (k - i) + 1):
            v = target[pos]
            if below[i] >= 0 and v < target[chosen[below[i]]]:
                continue
            if above[i] >= 0 and v > target[chosen[above[i]]]:
                continue
            chosen.append(pos)
            if extend(i + 1, pos + 1):
                return True
            chosen.pop()
        return False

    if not extend(0, 0):
        return None
    return tuple(pos + 1 for pos in chosen)


def find_embedding(pattern: Perm, target: Perm) -> tuple[int, ...] | None:
    """
    Positions (1-based, increasing) of the lexicographically least subsequence
    of target order-isomorphic to pattern, or None.

    >>> find_embedding((5, 1, 3, 4, 2), (3, 9, 1, 8, 6, 7, 4, 5, 2))
    (2, 3, 5, 6, 7)
    """
    return _embedding_search(pattern, target)


def contains(pattern: Perm, target: Perm) -> bool:
    """
    True iff target has a subsequence order-isomorphic to pattern.

    >>> contains(parse_perm("51342"), parse_perm("391867452"))
    True
    >>> contains((1, 2), (2, 1))
    False
    >>> contains((), (2, 1))
    True
    """
    if len(pattern) > len(target):
        return False
    return _embedding_search(pattern, target) is not None


def avoids(pattern: Perm, target: Perm) -> bool:
    """True iff target has no subsequence order-isomorphic to pattern."""
    return not contains(pattern, target)


def restrict(p: Perm, positions: tuple[int, int], values: tuple[int, int]) -> Perm:
    """
    The pattern of the entries of p whose position lies in the inclusive
    interval positions and whose value lies in the inclusive interval values.

    >>> restrict(parse_perm("391867452"), (3, 7), (2, 6))
    (2, 1)
    >>> restrict((2, 4, 1, 3), (1, 4), (1, 4))
    (2, 4, 1, 3)
    """
    a, b = positions
    c, d = values
    window = [v for i, v in enumerate(p, start=1) if a <= i <= b and c <= v <= d]
    return standardize(window)


# ---------------------------------------------------------------------------
# intervals, simplicity, inflations


def proper_intervals(p: Perm) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """
    All intervals of p of length strictly between 1 and n, as pairs of a
    position interval and the matching value interval, sorted by position.

    An interval is a contiguous window of positions whose values are also
    contiguous.

    >>> proper_intervals((2, 4, 1, 3))
    []
    >>> ((2, 4), (7, 9)) in proper_intervals(parse_perm("479832156"))
    True
    """
    n = len(p)
    found = []
    for a in range(1, n + 1):
        lo = hi = p[a - 1]
        for b in range(a + 1, n + 1):
            v = p[b - 1]
            lo, hi = min(lo, v), max(hi, v)
            if b - a == n - 1:
                break  # the whole permutation is not a proper interval
            if hi - lo == b - a:
                found.append(((a, b), (lo, hi)))
    return found


def is_simple(p: Perm) -> bool:
    """
    True iff p has no proper intervals.  Lengths 0 and 1 count as simple.

    >>> [is_simple(q) for q in [(2, 4, 1, 3), (1,), (1, 2, 3)]]
    [True, True, False]
    """
    n = len(p)
    # Same scan as proper_intervals, stopping at the first hit.
    for a in range(1, n + 1):
        lo = hi = p[a - 1]
        for b in range(a + 1, n + 1):
            v = p[b - 1]
            lo, hi = min(lo, v), max(hi, v)
            if b - a == n - 1:
                break
            if hi - lo == b - a:
                return False
    return True


def inflate(skeleton: Perm, components: Sequence[Perm]) -> Perm:
    """
    Replace each entry of the skeleton by a block order-isomorphic to the
    matching component.

    >>> format_perm(inflate((2, 4, 1, 3), [(1,), (1, 3, 2), (3, 2, 1), (1, 2)]))
    '479832156'
    >>> inflate((1, 2), [(1, 2), (1,)])
    (1, 2, 3)
    """
    if len(components) != len(skeleton):
        raise ValueError(
            f"skeleton length {len(skeleton)} != {len(components)} components"
        )
    if any(len(c) == 0 for c in components):
        raise ValueError("components must be nonempty")
    # Value offset of block i is the total size of blocks with smaller
    # skeleton value.
    offsets = [0] * len(skeleton)
    total = 0
    for idx in sorted(range(len(skeleton)), key=skeleton.__getitem__):
        offsets[idx] = total
        total += len(components[idx])
    out: list[int] = []
    for off, comp in zip(offsets, components):
        out.extend(off + v for v in comp)
    return tuple(out)


def direct_sum(p: Perm, q: Perm) -> Perm:
    """
    p followed by q shifted above it: 12[p, q].

    >>> direct_sum((2, 1), (1,))
    (2, 1, 3)
    """
    return p + tuple(v + len(p) for v in q)


def skew_sum(p: Perm, q: Perm) -> Perm:
    """
    p shifted above a following q: 21[p, q].

    >>> skew_sum((1,), (1, 2))
    (3, 1, 2)
    """
    return tuple(v + len(q) for v in p) + q


def sum_decomposition(p: Perm) -> list[Perm]:
    """
    The finest list of nonempty blocks with p = b1 (+) b2 (+) ... ; each block
    is sum-indecomposable and the list has one element iff p is.

    >>> sum_decomposition((1, 3, 2, 4))
    [(1,), (2, 1), (1,)]
    >>> sum_decomposition((2, 4, 1, 3))
    [(2, 4, 1, 3)]
    """
    blocks = []
    start = 0
    mx = 0
    for i, v in enumerate(p, start=1):
        mx = max(mx, v)
        if mx == i:
            blocks.append(standardize(p[start:i]))
            start = i
    return blocks


def skew_decomposition(p: Perm) -> list[Perm]:
    """The finest list of blocks with p = b1 (-) b2 (-) ... ."""
    n = len(p)
    blocks = []
    start = 0
    mn = n + 1
    for i, v in enumerate(p, start=1):
        mn = min(mn, v)
        if mn == n - i + 1:
            blocks.append(standardize(p[start:i]))
            start = i
    return blocks


def is_sum_indecomposable(p: Perm) -> bool:
    """
    True iff p is not a direct sum of two shorter nonempty permutations.

    Decided on the inversion graph, where it is equivalent both to
    connectivity and to the existence of a path between vertices 1 and n;
    the two criteria are computed independently and must agree.

    >>> [is_sum_indecomposable(q) for q in [(2, 1), (1, 2), (1,)]]
    [True, False, True]
    """
    if len(p) == 0:
        raise ValueError("the empty permutation has no decomposability status")
    g = perm_graph(p)
    by_connectivity = len(_graph_components(g)) == 1
    by_path = _has_path(g, 1, len(p))
    assert by_connectivity == by_path
    return by_connectivity


def is_skew_indecomposable(p: Perm) -> bool:
    """True iff p is not a skew sum of two shorter nonempty permutations."""
    if len(p) == 0:
        raise ValueError("the empty permutation has no decomposability status")
    return len(skew_decomposition(p)) == 1


# ---------------------------------------------------------------------------
# the inversion graph


@dataclass(frozen=True)
class PermGraph:
    """Graph on positions 1..n with edges at the inversions of a permutation."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]  # pairs (i, j) with i < j

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


def perm_graph(p: Perm) -> PermGraph:
    """
    The inversion graph: vertices are positions, {i, j} an edge iff i < j and
    p(i) > p(j).

    >>> perm_graph((2, 1)).edges
    frozenset({(1, 2)})
    >>> sorted(perm_graph((3, 1, 4, 2)).edges)
    [(1, 2), (1, 4), (3, 4)]
    """
    n = len(p)
    edges = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[i - 1] > p[j - 1]
    )
    return PermGraph(n, edges)


def _graph_components(g: PermGraph) -> list[set[int]]:
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in range(1, g.vertex_count + 1):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _has_path(g: PermGraph, a: int, b: int) -> bool:
    if a == b:
        return True
    adj = g.adjacency()
    seen = {a}
    frontier = [a]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w == b:
                return True
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return False


def is_induced_path_graph(g: PermGraph) -> bool:
    """True iff g is a path: connected, acyclic, max degree 2."""
    adj = g.adjacency()
    n = g.vertex_count
    if n == 0:
        return False
    if any(len(nb) > 2 for nb in adj.values()):
        return False
    if len(g.edges) != n - 1:
        return False
    return len(_graph_components(g)) == 1


# ---------------------------------------------------------------------------
# substitution decomposition


@dataclass(frozen=True)
class SimpleDecomposition:
    """A simple skeleton together with the blocks inflating it."""

    skeleton: Perm
    components: tuple[Perm, ...]


def simple_decomposition(p: Perm) -> SimpleDecomposition:
    """
    Write p as the inflation of a simple permutation of length >= 2.

    The skeleton is unique.  When it is 12 (resp. 21) the components are cut
    as (first sum- (resp. skew-) indecomposable block, remainder), which makes
    the component list canonical too; the reported skeleton is then always of
    length 2, never a longer monotone pattern.

    >>> d = simple_decomposition(parse_perm("479832156"))
    >>> d.skeleton, d.components
    ((2, 4, 1, 3), ((1,), (1, 3, 2), (3, 2, 1), (1, 2)))
    >>> simple_decomposition((1, 2, 3))
    SimpleDecomposition(skeleton=(1, 2), components=((1,), (1, 2)))
    >>> simple_decomposition((2, 4, 1, 3)).components
    ((1,), (1,), (1,), (1,))
    """
    n = len(p)
    if n < 2:
        raise ValueError("need length >= 2 to decompose")

    blocks = sum_decomposition(p)
    if len(blocks) > 1:
        first = blocks[0]
        rest = standardize(p[len(first):])
        return SimpleDecomposition((1, 2), (first, rest))
    blocks = skew_decomposition(p)
    if len(blocks) > 1:
        first = blocks[0]
        rest = standardize(p[len(first):])
        return SimpleDecomposition((2, 1), (first, rest))

    # Sum- and skew-indecomposable: the maximal proper intervals are pairwise
    # disjoint and contracting each to a point leaves a simple skeleton.
    windows = [pos for pos, _ in proper_intervals(p)]
    maximal = [
        (a, b)
        for a, b in windows
        if not any((c <= a and b <= d) and (a, b) != (c, d) for c, d in windows)
    ]
    cover: list[tuple[int, int]] = []
    pos = 1
    by_start = {a: (a, b) for a, b in maximal}
    while pos <= n:
        if pos in by_start:
            a, b = by_start[pos]
            cover.append((a, b))
            pos = b + 1
        else:
            cover.append((pos, pos))
            pos += 1
    assert sum(b - a + 1 for a, b in cover) == n
    components = tuple(standardize(p[a - 1 : b]) for a, b in cover)
    skeleton = standardize([p[a - 1] for a, _ in cover])
    assert len(skeleton) >= 4 and is_simple(skeleton)
    return SimpleDecomposition(skeleton, components)


# ---------------------------------------------------------------------------
# the eight symmetries


def reverse(p: Perm) -> Perm:
    """
    >>> reverse((1, 2, 3))
    (3, 2, 1)
    """
    return p[::-1]


def complement(p: Perm) -> Perm:
    """
    >>> complement((1, 2, 3))
    (3, 2, 1)
    >>> complement((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    n = len(p)
    return tuple(n + 1 - v for v in p)


def inverse(p: Perm) -> Perm:
    """
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


# Words in r/c/i, applied left to right, naming the dihedral group of the
# square acting on permutation plots.
SYMMETRY_WORDS: dict[str, str] = {
    "id": "",
    "reverse": "r",
    "complement": "c",
    "inverse": "i",
    "rotate180": "rc",
    "rotate90": "ic",
    "rotate270": "ci",
    "antidiagonal": "rci",
}

SYMMETRY_NAMES: tuple[str, ...] = tuple(SYMMETRY_WORDS)

_LETTER_OPS = {"r": reverse, "c": complement, "i": inverse}


def symmetry(p: Perm, which: str) -> Perm:
    """
    Apply one of the eight square symmetries, named as in SYMMETRY_NAMES.

    >>> symmetry((1, 2, 3), "reverse")
    (3, 2, 1)
    >>> symmetry((2, 4, 1, 3), "rotate180")
    (2, 4, 1, 3)
    """
    try:
        word = SYMMETRY_WORDS[which]
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}") from None
    for letter in word:
        p = _LETTER_OPS[letter](p)
    return p


def all_symmetries(p: Perm) -> set[Perm]:
    """
    The orbit of p under the eight symmetries.

    Orbits can collapse; 25314 is fixed by rotation and its orbit is a pair.

    >>> len(all_symmetries((1, 3, 4, 2)))
    8
    >>> sorted(all_symmetries((2, 5, 3, 1, 4)))
    [(2, 5, 3, 1, 4), (4, 1, 3, 5, 2)]
    """
    return {symmetry(p, name) for name in SYMMETRY_NAMES}
