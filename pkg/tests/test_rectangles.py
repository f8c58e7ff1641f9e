"""Rectangle independence and the recursive slicing construction."""
import random
from fractions import Fraction

import pytest

from permclass.rectangles import (
    Line,
    Rect,
    all_sliced,
    hline,
    independence_number,
    independent,
    is_independent_set,
    rect,
    slice_rectangles,
    slices,
    slicing_bound,
    vline,
    x_contained,
    y_overlap_pairs,
)

FIG8 = {
    "A": rect(20, 150, 100, 180),
    "B": rect(110, 140, 55, 150),
    "C": rect(80, 190, 40, 110),
    "D": rect(30, 100, 20, 70),
    "E": rect(35, 65, 60, 110),
}
FIG8_LIST = [FIG8[k] for k in "ABCDE"]


def random_rects(rng, count):
    out = []
    for _ in range(count):
        x1 = Fraction(rng.randint(0, 400), rng.randint(1, 4))
        y1 = Fraction(rng.randint(0, 400), rng.randint(1, 4))
        w = Fraction(rng.randint(1, 120), rng.randint(1, 3))
        h = Fraction(rng.randint(1, 120), rng.randint(1, 3))
        out.append(Rect(x1, x1 + w, y1, y1 + h))
    return out


def test_rect_validation_and_slicing():
    with pytest.raises(ValueError):
        rect(0, 0, 1, 2)
    with pytest.raises(ValueError):
        rect(0, 1, 2, 2)
    with pytest.raises(ValueError):
        Line("diagonal", Fraction(1))
    r = rect(0, 4, 1, 3)
    assert slices(hline(2), r)
    assert not slices(hline(1), r)
    assert not slices(hline(3), r)
    assert slices(vline(Fraction(1, 2)), r)
    assert not slices(vline(4), r)


def test_independence_basics():
    assert independent(rect(0, 1, 0, 1), rect(2, 3, 2, 3))
    assert not independent(rect(0, 1, 0, 1), rect(1, 3, 2, 3))
    assert not independent(rect(0, 1, 2, 3), rect(2, 3, 0, 4))
    nested = [rect(0, 10, 0, 10), rect(2, 8, 2, 8)]
    assert independence_number(nested) == 1
    for m in range(7):
        stairs = [rect(3 * i, 3 * i + 1, 3 * i, 3 * i + 1) for i in range(m)]
        assert is_independent_set(stairs)
        assert independence_number(stairs) == m


def test_fig8_independence_and_overlap_graph():
    assert independence_number(FIG8_LIST) == 1
    # every pair's y-projections meet except A and D
    expected = {
        (i, j)
        for i in range(5)
        for j in range(i + 1, 5)
        if (i, j) != (0, 3)
    }
    assert y_overlap_pairs(FIG8_LIST) == expected
    assert x_contained(FIG8["E"], FIG8["D"])
    assert x_contained(FIG8["D"], FIG8["A"])
    assert x_contained(FIG8["B"], FIG8["A"])
    assert x_contained(FIG8["B"], FIG8["C"])
    assert not x_contained(FIG8["D"], FIG8["C"])
    assert not x_contained(FIG8["A"], FIG8["C"])


def test_slicing_bound_values():
    assert [slicing_bound(m) for m in range(4)] == [0, 10, 50, 210]
    with pytest.raises(ValueError):
        slicing_bound(-1)


def test_slice_examples():
    assert slice_rectangles([]) == []
    single = slice_rectangles([rect(3, 7, 2, 4)])
    assert len(single) == 1
    assert all_sliced([rect(3, 7, 2, 4)], single)
    lines = slice_rectangles(FIG8_LIST)
    assert all_sliced(FIG8_LIST, lines)
    assert len(lines) <= slicing_bound(independence_number(FIG8_LIST))


def test_slice_degenerate_middle_region():
    # the middle region next to the chosen pair need not be a y-overlap
    # clique; this configuration exercises the multi-line fallback
    rects = [
        rect(0, 10, 100, 110),
        rect(5, 6, 91, 99),
        rect(2, 3, 0, 90),
    ]
    assert independence_number(rects) == 2
    lines = slice_rectangles(rects)
    assert all_sliced(rects, lines)
    assert len(lines) <= slicing_bound(2)


def test_random_suites_sliced_within_bound():
    rng = random.Random(1729)
    for _ in range(100):
        rects = random_rects(rng, rng.randint(1, 15))
        lines = slice_rectangles(rects)
        assert all_sliced(rects, lines)
        assert len(lines) <= slicing_bound(independence_number(rects))
        assert all(isinstance(line.coordinate, Fraction) for line in lines)
