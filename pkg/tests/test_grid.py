"""Grid matrices: cells, griddings, gridded counting, graphs, griddability."""
import itertools
import math
import random

import pytest

from permclass.classes import av, enumerate_class
from permclass.genfun import ONE, empirical_growth, parse_poly, rational_gf, series
from permclass.grid import (
    DEC_CELL,
    EMPTY_CELL,
    INC_CELL,
    POINT_CELL,
    CellClass,
    Gridding,
    av_cell,
    component_cells,
    components,
    enumerate_gridded,
    find_gridding,
    format_matrix,
    graph_of_matrix,
    grid_matrix,
    grid_member,
    grid_members,
    gridded_perms,
    gridding_valid,
    is_D_griddable,
    is_forest,
    parse_cell,
    parse_matrix,
    skew_closure_contained,
    sum_closure_contained,
    sum_power,
    sumcl_cell,
)
from permclass.perm import all_perms, parse_perm
from permclass.witnesses import basis_WO

FIG2 = parse_matrix("av(12), av(321), 0\nav(12), 0, pt")
HOOK = parse_matrix("inc, 0\ninc, inc")
FIG3 = parse_matrix(
    "av(123), 0, 0, 0, av(12)\n"
    "0, av(231), av(12), 0, 0\n"
    "av(321), 0, 0, 0, 0\n"
    "0, av(21), 0, av(132), 0\n"
    "av(123), 0, 0, 0, av(12)\n"
    "0, 0, 0, av(321), 0"
)


def brute_has_gridding(p, m):
    n = len(p)

    def divisions(parts):
        return [
            (1,) + mid + (n + 1,)
            for mid in itertools.combinations_with_replacement(
                range(1, n + 2), parts - 1
            )
        ]

    return any(
        gridding_valid(p, m, Gridding(c, r))
        for c in divisions(m.width)
        for r in divisions(m.height)
    )


def test_cell_membership_by_kind():
    assert EMPTY_CELL.member(()) and not EMPTY_CELL.member((1,))
    assert POINT_CELL.member(()) and POINT_CELL.member((1,))
    assert not POINT_CELL.member((1, 2))
    assert INC_CELL.member((1, 2, 3)) and not INC_CELL.member((1, 3, 2))
    assert DEC_CELL.member((3, 2, 1)) and not DEC_CELL.member((1, 3, 2))
    cell = av_cell("321")
    assert cell.member((2, 3, 1)) and not cell.member((4, 3, 2, 1))
    with pytest.raises(ValueError):
        CellClass("diag")
    with pytest.raises(ValueError):
        CellClass("av")
    with pytest.raises(ValueError):
        CellClass("inc", basis=((2, 1),))


def test_sumcl_cell_against_independent_encoding():
    # the sum closure of 21 is exactly the class avoiding 231, 312, 321:
    # blocks are single rises or descents
    cell = sumcl_cell("21")
    wanted = av("231", "312", "321")
    counts, members = enumerate_class(wanted, 6)
    assert cell.counts(6) == counts
    for n in range(6):
        for p in all_perms(n):
            assert cell.member(p) == (p in set(members[n]))


def test_parse_format_round_trip():
    texts = [
        "inc, inc",
        "av(12), av(321), 0\nav(12), 0, pt",
        "sumcl(21;312), dec\npt, av(4321)",
    ]
    for text in texts:
        m = parse_matrix(text)
        assert parse_matrix(format_matrix(m)) == m
    long = av_cell(tuple(range(10, 0, -1)))
    m = grid_matrix([[long, INC_CELL]])
    assert parse_matrix(format_matrix(m)) == m
    with pytest.raises(ValueError):
        parse_matrix("inc, inc\ndec")
    with pytest.raises(ValueError):
        parse_matrix("")
    with pytest.raises(ValueError):
        parse_cell("av()")


def test_matrix_indexing_from_lower_left():
    m = parse_matrix("inc, 0\ndec, pt")
    assert m.cell(1, 1) == DEC_CELL
    assert m.cell(2, 1) == POINT_CELL
    assert m.cell(1, 2) == INC_CELL
    assert m.cell(2, 2) == EMPTY_CELL
    assert m.nonempty_cells() == ((1, 1), (1, 2), (2, 1))
    with pytest.raises(IndexError):
        m.cell(3, 1)


def test_find_gridding_known_divisions():
    g = find_gridding(parse_perm("391867452"), FIG2)
    assert g == Gridding((1, 5, 9, 10), (1, 4, 10))
    assert gridding_valid(parse_perm("391867452"), FIG2, g)
    assert find_gridding((), FIG2) == Gridding((1, 1, 1, 1), (1, 1, 1))
    assert find_gridding((2, 1), grid_matrix([[INC_CELL]])) is None


def test_gridding_valid_rejects_bad_shapes():
    p = (1, 2)
    m = parse_matrix("inc, inc")
    assert gridding_valid(p, m, Gridding((1, 2, 3), (1, 3)))
    assert not gridding_valid(p, m, Gridding((1, 3), (1, 3)))
    assert not gridding_valid(p, m, Gridding((1, 2, 4), (1, 3)))
    assert not gridding_valid(p, m, Gridding((2, 2, 3), (1, 3)))
    assert not gridding_valid(p, m, Gridding((1, 3, 2, 3), (1, 3)))


def test_find_gridding_soundness_and_completeness():
    rng = random.Random(11)
    matrices = [
        FIG2,
        HOOK,
        parse_matrix("sumcl(21), av(21)"),
        parse_matrix("dec, av(132)\npt, inc"),
    ]
    for m in matrices:
        for n in range(8):
            vals = list(range(1, n + 1))
            rng.shuffle(vals)
            p = tuple(vals)
            g = find_gridding(p, m)
            if g is not None:
                assert gridding_valid(p, m, g)
        for n in range(5):
            for p in all_perms(n):
                assert grid_member(p, m) == brute_has_gridding(p, m)


def test_enumerate_gridded_monotone_strip():
    assert enumerate_gridded(parse_matrix("inc"), 6) == [1] * 7
    assert enumerate_gridded(parse_matrix("inc, inc"), 10) == [
        2 ** n if n else 1 for n in range(11)
    ]


def test_enumerate_gridded_hook_counts_and_growth():
    counts = enumerate_gridded(HOOK, 12)
    assert counts == series(rational_gf(ONE, parse_poly("1-3x+x^2")), 12)
    assert counts[:5] == [1, 3, 8, 21, 55]
    golden_sq = (3 + math.sqrt(5)) / 2
    assert abs(empirical_growth(counts).ratio - golden_sq) < 1e-3


def test_enumerate_gridded_matches_generation_and_brute_force():
    matrices = [
        parse_matrix("inc, inc"),
        HOOK,
        FIG2,
        parse_matrix("sumcl(21), av(21)"),
    ]
    for m in matrices:
        formula = enumerate_gridded(m, 4)
        assert [len(list(gridded_perms(m, n))) for n in range(5)] == formula
        brute = []
        for n in range(5):
            total = 0
            for p in all_perms(n):
                total += sum(
                    1
                    for c in (
                        (1,) + mid + (n + 1,)
                        for mid in itertools.combinations_with_replacement(
                            range(1, n + 2), m.width - 1
                        )
                    )
                    for r in (
                        (1,) + mid + (n + 1,)
                        for mid in itertools.combinations_with_replacement(
                            range(1, n + 2), m.height - 1
                        )
                    )
                    if gridding_valid(p, m, Gridding(c, r))
                )
            brute.append(total)
        assert brute == formula


def test_grid_members_two_increasing_strips():
    layers = grid_members(parse_matrix("inc, inc"), 8)
    # a member splits into two increasing runs, so it has at most one descent
    assert [len(s) for s in layers] == [1] + [2 ** n - n for n in range(1, 9)]


def test_gridded_and_member_growth_agree():
    # growth rate means the nth-root limit, so that is the estimate
    # compared here; member ratios still overshoot at this length
    for m in [parse_matrix("inc, inc"), HOOK]:
        gridded = enumerate_gridded(m, 12)
        members = [len(s) for s in grid_members(m, 12)]
        assert all(a >= b for a, b in zip(gridded, members))
        diff = abs(
            empirical_growth(gridded).nth_root
            - empirical_growth(members).nth_root
        )
        assert diff < 0.1
    hook_members = [len(s) for s in grid_members(HOOK, 7)]
    assert hook_members == [1, 1, 2, 6, 21, 72, 231, 698]


def test_block_diagonal_growth_is_component_max():
    diag = parse_matrix("0, 0, inc\ninc, 0, 0\ninc, inc, 0")
    parts = components(diag)
    assert len(parts) == 2
    whole = empirical_growth(enumerate_gridded(diag, 12)).ratio
    per_part = [
        empirical_growth(enumerate_gridded(sub, 12)).ratio for sub in parts
    ]
    assert abs(whole - max(per_part)) < 0.1


def test_graph_of_matrix_adjacency():
    g = graph_of_matrix(parse_matrix("inc, dec\ndec, inc"))
    assert sorted(g.edges) == [
        (((1, 1), (1, 2))),
        (((1, 1), (2, 1))),
        (((1, 2), (2, 2))),
        (((2, 1), (2, 2))),
    ]
    assert all(g.degree(v) == 2 for v in g.vertices)
    diagonal = graph_of_matrix(parse_matrix("0, inc\ndec, 0"))
    assert diagonal.edges == frozenset()
    skip = graph_of_matrix(parse_matrix("inc\n0\ndec"))
    assert sorted(skip.edges) == [((1, 1), (1, 3))]


def test_fig3_components():
    assert [sorted(c) for c in component_cells(FIG3)] == [
        [(1, 2), (1, 4), (1, 6), (5, 2), (5, 6)],
        [(2, 3), (2, 5), (3, 5), (4, 1), (4, 3)],
    ]
    first, second = components(FIG3)
    assert format_matrix(first) == (
        "av(123), av(12)\nav(321), 0\nav(123), av(12)"
    )
    assert format_matrix(second) == (
        "av(231), av(12), 0\nav(21), 0, av(132)\n0, 0, av(321)"
    )


def test_is_forest():
    # the first Fig. 3 component is a 5-cycle: two edges down column 1,
    # one down column 5, one across each of rows 2 and 6
    assert not is_forest(FIG3)
    assert not is_forest(parse_matrix("inc, dec\ndec, inc"))
    assert is_forest(parse_matrix("inc"))
    assert is_forest(parse_matrix("inc, inc"))
    assert is_forest(parse_matrix("0, inc\ndec, 0"))
    assert is_forest(parse_matrix("inc, 0\ninc, inc"))


def test_sum_closure_contained():
    assert sum_closure_contained((1,), av("21"))
    assert sum_closure_contained((2, 1), av("321"))
    assert not sum_closure_contained(parse_perm("25314"), av("21"))
    assert sum_closure_contained((), av("21"))
    assert sum_closure_contained((1, 2), av_cell("21"))
    assert not sum_closure_contained((1, 2), av_cell("123"))
    assert sum_closure_contained(parse_perm("25314"), sumcl_cell("25314"))
    assert sum_closure_contained((2, 1), sumcl_cell("25314"))
    assert not sum_closure_contained((3, 1, 4, 2), sumcl_cell("25314"))
    assert sum_power((2, 1), 2) == (2, 1, 4, 3)


def test_skew_closure_contained():
    assert skew_closure_contained((1, 2), av("123"))
    assert skew_closure_contained((2, 1), av("123"))
    assert not skew_closure_contained((1, 2), av("21"))
    assert skew_closure_contained((1,), av("12"))
    assert not skew_closure_contained((2, 1), sumcl_cell("321"))
    assert skew_closure_contained((), sumcl_cell("321"))


def test_is_D_griddable_examples():
    wo = basis_WO()
    report = is_D_griddable(av("21"), wo)
    assert report.griddable and bool(report)
    report = is_D_griddable(sumcl_cell("25314"), wo)
    assert not report.griddable
    assert report.witness == parse_perm("25314")
    assert report.direction == "sum"
    report = is_D_griddable(av("123"), [(1, 2), (2, 1)])
    assert not report.griddable
    assert (report.witness, report.direction) == ((1, 2), "skew")


def test_is_D_griddable_monotone_in_the_class():
    targets = [basis_WO(), [(1, 2), (2, 1)]]
    pairs = [
        (av("123", "321"), av("123")),
        (av("21", "123"), av("21")),
        (av("321", "3412"), av("321")),
        (av("2413", "3142", "123"), av("2413", "3142")),
    ]
    for smaller, bigger in pairs:
        for d in targets:
            if is_D_griddable(bigger, d).griddable:
                assert is_D_griddable(smaller, d).griddable
