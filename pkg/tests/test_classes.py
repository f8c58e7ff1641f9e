"""Finite-basis classes: enumeration, closures, sum completions."""
import itertools
import random

import pytest

from permclass.classes import (
    AvClass,
    av,
    avoids,
    closure,
    enumerate_class,
    in_wreath_closure,
    is_antichain,
    normalize_basis,
    parse_basis,
    simple_subperms,
    sum_closure_counts,
    sum_closure_members,
    sum_indecomposables_in,
)
from permclass.genfun import ONE, parse_poly, rational_gf, series
from permclass.perm import all_perms, contains, parse_perm, standardize

OSC_BASIS = av("321", "2341", "3412", "4123")
FINLABEL_BASIS = av(
    "321", "3412", "4123", "23451", "134526", "134625", "314526", "314625"
)


def test_normalize_basis():
    assert normalize_basis([(2, 1), (3, 2, 1)]).basis == ((2, 1),)
    assert normalize_basis([(1,)]).basis == ((1,),)
    assert FINLABEL_BASIS.basis == tuple(
        sorted(
            [
                parse_perm(t)
                for t in [
                    "321", "3412", "4123", "23451",
                    "134526", "134625", "314526", "314625",
                ]
            ],
            key=lambda p: (len(p), p),
        )
    )
    with pytest.raises(ValueError):
        normalize_basis([])


def test_parse_basis_file_format():
    text = "# increasing oscillations\n321\n2341\n\n3412  # inline note\n4123\n"
    assert parse_basis(text) == OSC_BASIS


def test_avoids():
    assert avoids((1, 2, 3), av("21"))
    assert not avoids(parse_perm("391867452"), av("51342"))
    assert avoids((), av("51342"))


def test_enumerate_trivial_classes():
    assert enumerate_class(av("12"), 5)[0] == [1] * 6
    assert enumerate_class(av("12", "21"), 3)[0] == [1, 1, 0, 0]
    with pytest.raises(ValueError):
        enumerate_class(AvClass(()), 3)


def test_enumerate_oscillation_closure_matches_gf():
    counts, _ = enumerate_class(OSC_BASIS, 10)
    gf = rational_gf(parse_poly("1-x"), parse_poly("1-2x-x^3"))
    assert counts == series(gf, 10)


def test_enumerate_members_are_downward_closed():
    for cls in [OSC_BASIS, av("132", "4321")]:
        _, members = enumerate_class(cls, 7)
        flat = {p for layer in members for p in layer}
        for layer in members[1:]:
            for p in layer:
                for i in range(len(p)):
                    assert standardize(p[:i] + p[i + 1 :]) in flat


def test_closure_small():
    assert closure([(2, 1)]) == {(), (1,), (2, 1)}
    assert len(closure([(2, 4, 1, 3)])) == 9
    got = closure([parse_perm("1432")])
    assert {p for p in got if len(p) == 4} == {parse_perm("1432")}
    assert (2, 4, 1, 3) not in got and (3, 1, 4, 2) not in got


def test_closure_agrees_with_subset_brute_force():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randrange(0, 8)
        p = tuple(rng.sample(range(1, n + 1), n))
        brute = set()
        for r in range(n + 1):
            for sub in itertools.combinations(p, r):
                brute.add(standardize(sub))
        assert closure([p]) == brute


def test_sum_indecomposables_in():
    assert sum_indecomposables_in(closure([parse_perm("251364")]), 6) == [
        0, 1, 1, 2, 3, 3, 1,
    ]
    assert sum_indecomposables_in(closure([parse_perm("1432")]), 3) == [0, 1, 1, 1]
    assert sum_indecomposables_in(closure([(1, 2)]), 2) == [0, 1, 0]
    # a basis works as the source too
    assert sum_indecomposables_in(av("21"), 4) == [0, 1, 0, 0, 0]


def test_sum_closure_counts_match_gf():
    got = sum_closure_counts([parse_perm("1432")], 15)
    assert got == series(rational_gf(ONE, parse_poly("1-x-x^2-x^3")), 15)
    assert sum_closure_counts([(1,)], 5) == [1] * 6
    got = sum_closure_counts([parse_perm("251364")], 12)
    want = series(
        rational_gf(ONE, parse_poly("1-x-x^2-2x^3-3x^4-3x^5-x^6")), 12
    )
    assert got == want


def test_sum_closure_members_agree_with_counts():
    for gen in ["1432", "251364", "21"]:
        sets = sum_closure_members([parse_perm(gen)], 9)
        counts = sum_closure_counts([parse_perm(gen)], 9)
        assert [len(s) for s in sets] == counts
        # spot membership: every member avoids nothing outside the closure
        for s in sets[1:]:
            for p in s:
                from permclass.perm import sum_decomposition

                for block in sum_decomposition(p):
                    assert block in closure([parse_perm(gen)])


def test_sum_closure_supermultiplicative():
    for gen in ["1432", "251364"]:
        c = sum_closure_counts([parse_perm(gen)], 14)
        for m in range(len(c)):
            for n in range(len(c) - m):
                assert c[m] * c[n] <= c[m + n]


def test_is_antichain():
    assert not is_antichain([(1,), (1, 2)])
    assert is_antichain([(2, 3, 1), (3, 1, 2)])
    assert is_antichain([])
    assert is_antichain(FINLABEL_BASIS.basis)


def test_simple_subperms():
    assert simple_subperms((1, 4, 3, 2)) == {(1,), (1, 2), (2, 1)}
    got = simple_subperms(parse_perm("25314"))
    assert (2, 4, 1, 3) in got or (3, 1, 4, 2) in got


def test_in_wreath_closure():
    only_trivial = lambda q: len(q) <= 3
    assert in_wreath_closure(parse_perm("1432"), only_trivial)
    assert not in_wreath_closure(parse_perm("25314"), only_trivial)
    assert in_wreath_closure((1,), only_trivial)


def test_contains_two_indecomposables_propagates_down():
    # single-generator closures, generators of length <= 6 here
    for n in range(1, 7):
        for gen in all_perms(n):
            blocks = sum_indecomposables_in(closure([gen]), n)
            for ln in range(4, n + 1):
                if blocks[ln] >= 2:
                    assert blocks[ln - 1] >= 2


def test_erdos_szekeres_m3_exhaustive():
    inc, dec = (1, 2, 3), (3, 2, 1)
    for p in all_perms(5):
        assert contains(inc, p) or contains(dec, p)


def test_erdos_szekeres_m4_sampled():
    inc, dec = (1, 2, 3, 4), (4, 3, 2, 1)
    rng = random.Random(2718)
    base = list(range(1, 11))
    for _ in range(100_000):
        rng.shuffle(base)
        p = tuple(base)
        assert contains(inc, p) or contains(dec, p)
