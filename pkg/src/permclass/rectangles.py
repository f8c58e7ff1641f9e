"""
Axes-parallel rectangles, slicing lines, and the constructive bound behind
griddability: any collection whose largest independent set has size m can be
sliced by a number of lines depending only on m.

Two rectangles are independent when both their x- and y-projections are
disjoint.  A line slices a rectangle when it meets its open interior.
"""
from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction


@dataclasses.dataclass(frozen=True, order=True)
class Rect:
    """Closed rational-coordinate rectangle [x1, x2] x [y1, y2]."""

    x1: Fraction
    x2: Fraction
    y1: Fraction
    y2: Fraction

    def __post_init__(self) -> None:
        if not self.x1 < self.x2 or not self.y1 < self.y2:
            raise ValueError("rectangle needs positive width and height")

    @property
    def height(self) -> Fraction:
        return self.y2 - self.y1

    @property
    def width(self) -> Fraction:
        return self.x2 - self.x1


def rect(x1, x2, y1, y2) -> Rect:
    """
    Build a rectangle, coercing coordinates to exact rationals.

    >>> rect(0, 2, 1, 3).height
    Fraction(2, 1)
    >>> rect(0, 0, 1, 3)
    Traceback (most recent call last):
        ...
    ValueError: rectangle needs positive width and height
    """
    return Rect(Fraction(x1), Fraction(x2), Fraction(y1), Fraction(y2))


@dataclasses.dataclass(frozen=True, order=True)
class Line:
    """A full horizontal or vertical line at a rational coordinate."""

    orientation: str
    coordinate: Fraction

    def __post_init__(self) -> None:
        if self.orientation not in ("horizontal", "vertical"):
            raise ValueError(f"bad orientation {self.orientation!r}")


def hline(y) -> Line:
    return Line("horizontal", Fraction(y))


def vline(x) -> Line:
    return Line("vertical", Fraction(x))


def slices(line: Line, r: Rect) -> bool:
    """
    True iff the line meets the open interior of the rectangle; touching an
    edge does not count.

    >>> slices(hline(2), rect(0, 4, 1, 3))
    True
    >>> slices(hline(3), rect(0, 4, 1, 3))
    False
    >>> slices(vline(1), rect(0, 4, 1, 3))
    True
    """
    if line.orientation == "horizontal":
        return r.y1 < line.coordinate < r.y2
    return r.x1 < line.coordinate < r.x2


def all_sliced(rects, lines) -> bool:
    """True iff every rectangle is sliced by some line."""
    return all(any(slices(line, r) for line in lines) for r in rects)


def independent(r: Rect, s: Rect) -> bool:
    """
    True iff both axis projections are disjoint as closed intervals.

    >>> independent(rect(0, 1, 0, 1), rect(2, 3, 2, 3))
    True
    >>> independent(rect(0, 1, 0, 1), rect(1, 3, 2, 3))
    False
    """
    x_disjoint = r.x2 < s.x1 or s.x2 < r.x1
    y_disjoint = r.y2 < s.y1 or s.y2 < r.y1
    return x_disjoint and y_disjoint


def is_independent_set(rects) -> bool:
    return all(independent(r, s) for r, s in itertools.combinations(rects, 2))


def independence_number(rects) -> int:
    """
    Size of the largest pairwise-independent subset, by exact search.

    >>> independence_number([rect(0, 3, 0, 3), rect(1, 2, 1, 2)])
    1
    >>> independence_number([rect(i, i + 1, i, i + 1) for i in range(0, 8, 2)])
    4
    >>> independence_number([])
    0
    """
    rects = list(rects)
    n = len(rects)
    compatible = [
        {j for j in range(n) if j != i and independent(rects[i], rects[j])}
        for i in range(n)
    ]
    best = 0

    def extend(chosen: int, candidates: set[int]) -> None:
        nonlocal best
        best = max(best, chosen)
        if chosen + len(candidates) <= best:
            return
        for i in sorted(candidates):
            extend(chosen + 1, {j for j in candidates if j > i} & compatible[i])

    extend(0, set(range(n)))
    return best


def slicing_bound(m: int) -> int:
    """
    The recursive line budget: f(0) = 0 and f(m) = 4 f(m-1) + 10.

    >>> [slicing_bound(m) for m in range(4)]
    [0, 10, 50, 210]
    """
    if m < 0:
        raise ValueError("need m >= 0")
    out = 0
    for _ in range(m):
        out = 4 * out + 10
    return out


def y_overlap_pairs(rects) -> set[tuple[int, int]]:
    """
    Index pairs (i < j) whose y-projections share an open interval: the edge
    set of the interval graph driving the slicing recursion.  Projections
    that merely touch do not count, since no line through both interiors
    exists at the shared height.

    >>> sorted(y_overlap_pairs([rect(0, 1, 0, 5), rect(2, 3, 4, 9), rect(4, 5, 8, 9)]))
    [(0, 1), (1, 2)]
    >>> y_overlap_pairs([rect(0, 1, 0, 2), rect(2, 3, 2, 4)])
    set()
    """
    rects = list(rects)
    return {
        (i, j)
        for i, j in itertools.combinations(range(len(rects)), 2)
        if max(rects[i].y1, rects[j].y1) < min(rects[i].y2, rects[j].y2)
    }


def x_contained(r: Rect, s: Rect) -> bool:
    """True iff the x-projection of r is contained in that of s."""
    return s.x1 <= r.x1 and r.x2 <= s.x2


def _hit_all(rects: list[Rect]) -> list[Line]:
    # Horizontal lines meeting every open y-interval, greedily grouped by
    # upper edge; one line per group through the common open intersection.
    out: list[Line] = []
    lo = hi = None
    for r in sorted(rects, key=lambda r: (r.y2, r.y1)):
        if lo is None:
            lo, hi = r.y1, r.y2
        elif max(lo, r.y1) < hi:
            lo = max(lo, r.y1)
        else:
            out.append(hline((lo + hi) / 2))
            lo, hi = r.y1, r.y2
    if lo is not None:
        out.append(hline((lo + hi) / 2))
    return out


def _slice_indexed(items: list[tuple[int, Rect]]) -> list[Line]:
    if not items:
        return []
    rects = [r for _, r in items]
    overlap = y_overlap_pairs(rects)
    disjoint = [
        (a, b)
        for a, b in itertools.combinations(range(len(items)), 2)
        if (a, b) not in overlap
    ]
    if not disjoint:
        # every pair meets in y, so by Helly one horizontal line does
        lo = max(r.y1 for r in rects)
        hi = min(r.y2 for r in rects)
        return [hline((lo + hi) / 2)]

    def pair_key(ab):
        a, b = ab
        return (
            max(rects[a].height, rects[b].height),
            items[a][0],
            items[b][0],
        )

    a, b = min(disjoint, key=pair_key)
    if rects[a].height <= rects[b].height:
        short, tall = rects[a], rects[b]
    else:
        short, tall = rects[b], rects[a]
    short_below = short.y2 < tall.y1

    boundary = [
        vline(short.x1),
        vline(short.x2),
        vline(tall.x1),
        vline(tall.x2),
        hline(short.y1),
        hline(short.y2),
        hline(tall.y1),
        hline(tall.y2),
    ]

    # Unsliced rectangles lie beyond the tall one on its short-facing side,
    # or beyond the short one on its tall-facing side; each half-plane is
    # split by its rectangle's vertical edges into two corner regions,
    # recursed on, and a middle strip, cleared with horizontal lines.
    corners: dict[str, list[tuple[int, Rect]]] = {k: [] for k in "acdf"}
    middle_tall: list[Rect] = []
    middle_short: list[Rect] = []
    for idx, r in items:
        if any(slices(line, r) for line in boundary):
            continue
        beyond_tall = r.y2 <= tall.y1 if short_below else r.y1 >= tall.y2
        if beyond_tall:
            if r.x2 <= tall.x1:
                corners["a"].append((idx, r))
            elif r.x1 >= tall.x2:
                corners["c"].append((idx, r))
            else:
                middle_tall.append(r)
        else:
            if r.x2 <= short.x1:
                corners["d"].append((idx, r))
            elif r.x1 >= short.x2:
                corners["f"].append((idx, r))
            else:
                middle_short.append(r)

    out = list(boundary)
    out += _hit_all(middle_tall)
    out += _hit_all(middle_short)
    for key in "acdf":
        out += _slice_indexed(corners[key])
    return out


def slice_rectangles(rects) -> list[Line]:
    """
    Lines slicing every input rectangle, built by the recursive corner
    construction; the count is bounded by slicing_bound of the input's
    independence number (checked by the caller's tests, not here).

    >>> slice_rectangles([])
    []
    >>> slice_rectangles([rect(0, 2, 0, 2)])
    [Line(orientation='horizontal', coordinate=Fraction(1, 1))]
    """
    items = [(i, r) for i, r in enumerate(rects)]
    lines = list(dict.fromkeys(_slice_indexed(items)))
    assert all_sliced([r for _, r in items], lines)
    return lines
