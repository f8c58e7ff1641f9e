"""Single-permutation structure: containment, intervals, decompositions."""
import itertools
import random

from permclass.perm import (
    SYMMETRY_NAMES,
    all_perms,
    all_symmetries,
    complement,
    contains,
    direct_sum,
    find_embedding,
    format_perm,
    inflate,
    inverse,
    is_perm,
    is_simple,
    is_skew_indecomposable,
    is_sum_indecomposable,
    parse_perm,
    perm_graph,
    proper_intervals,
    restrict,
    reverse,
    simple_decomposition,
    skew_decomposition,
    skew_sum,
    standardize,
    sum_decomposition,
    symmetry,
)


def test_parse_and_format_round_trip():
    for text in ["479832156", "1", "", "2 4 1 3", "10 1 2 3 4 5 6 7 8 9 11"]:
        p = parse_perm(text)
        assert parse_perm(format_perm(p)) == p
    assert parse_perm("2,4,1,3") == (2, 4, 1, 3)
    assert format_perm((2, 4, 1, 3)) == "2413"


def test_parse_rejects_non_bijections():
    for bad in ["11", "13", "0", "1 2 2", "1 3"]:
        try:
            parse_perm(bad)
        except ValueError:
            continue
        raise AssertionError(f"parsed {bad!r}")


def test_contains_examples():
    assert contains(parse_perm("51342"), parse_perm("391867452"))
    assert contains((1,), (2, 1))
    assert not contains((1, 2), (2, 1))
    assert contains((), (2, 1))
    assert contains((), ())


def test_embedding_witness_is_order_isomorphic():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randrange(5, 11)
        target = tuple(rng.sample(range(1, n + 1), n))
        k = rng.randrange(1, 6)
        pattern = tuple(rng.sample(range(1, k + 1), k))
        w = find_embedding(pattern, target)
        if w is None:
            assert not contains(pattern, target)
        else:
            assert standardize([target[i - 1] for i in w]) == pattern


def test_restrict_examples():
    assert restrict(parse_perm("391867452"), (3, 7), (2, 6)) == (2, 1)
    p = parse_perm("391867452")
    assert restrict(p, (1, 9), (1, 9)) == p
    assert restrict(p, (1, 2), (1, 9)) == (1, 2)
    assert restrict(p, (4, 3), (1, 9)) == ()


def test_proper_intervals():
    assert ((2, 4), (7, 9)) in proper_intervals(parse_perm("479832156"))
    assert proper_intervals((2, 4, 1, 3)) == []
    assert proper_intervals((1, 2)) == []
    # every reported window really is an interval
    p = parse_perm("479832156")
    for (a, b), (c, d) in proper_intervals(p):
        vals = sorted(p[a - 1 : b])
        assert vals == list(range(c, d + 1))
        assert 1 < b - a + 1 < len(p)


def test_is_simple():
    assert is_simple((2, 4, 1, 3))
    assert not is_simple(parse_perm("479832156"))
    assert is_simple((1,))
    assert is_simple(())
    assert is_simple((1, 2)) and is_simple((2, 1))
    # simple permutation counts by length, frozen from the known sequence
    expected = {4: 2, 5: 6, 6: 46, 7: 338}
    for n, want in expected.items():
        assert sum(1 for p in all_perms(n) if is_simple(p)) == want
    assert sum(1 for p in all_perms(3) if is_simple(p)) == 0


def test_inflate_examples():
    assert inflate((2, 4, 1, 3), [(1,), (1, 3, 2), (3, 2, 1), (1, 2)]) == parse_perm(
        "479832156"
    )
    sigma = (3, 1, 4, 2)
    assert inflate(sigma, [(1,)] * 4) == sigma
    assert inflate((1, 2), [(1, 2), (1,)]) == (1, 2, 3)


def test_inflate_errors():
    for skel, comps in [((1, 2), [(1,)]), ((1, 2), [(1,), ()])]:
        try:
            inflate(skel, comps)
        except ValueError:
            continue
        raise AssertionError("inflate accepted bad input")


def test_simple_decomposition_examples():
    d = simple_decomposition(parse_perm("479832156"))
    assert d.skeleton == (2, 4, 1, 3)
    assert d.components == ((1,), (1, 3, 2), (3, 2, 1), (1, 2))
    d = simple_decomposition((1, 2, 3))
    assert d.skeleton == (1, 2) and d.components == ((1,), (1, 2))
    d = simple_decomposition((2, 4, 1, 3))
    assert d.skeleton == (2, 4, 1, 3) and d.components == ((1,),) * 4


def test_simple_decomposition_round_trip_exhaustive():
    for n in range(2, 8):
        for p in all_perms(n):
            d = simple_decomposition(p)
            assert inflate(d.skeleton, d.components) == p
            assert is_simple(d.skeleton) and len(d.skeleton) >= 2
            if d.skeleton == (1, 2):
                assert is_sum_indecomposable(d.components[0])
            elif d.skeleton == (2, 1):
                assert is_skew_indecomposable(d.components[0])
            else:
                assert len(d.skeleton) >= 4


def test_perm_graph():
    assert perm_graph((1, 2)).edges == frozenset()
    assert perm_graph((2, 1)).edges == frozenset({(1, 2)})
    g = perm_graph((3, 1, 4, 2))
    assert sorted(g.edges) == [(1, 2), (1, 4), (3, 4)]
    assert g.neighbors(1) == {2, 4}


def test_indecomposability():
    assert is_sum_indecomposable((2, 1))
    assert not is_sum_indecomposable((1, 2))
    assert is_sum_indecomposable((1,))
    assert sum(1 for p in all_perms(4) if is_sum_indecomposable(p)) == 13
    # counts for n = 1..7, frozen from the inverse-factorial recurrence
    expected = [1, 1, 3, 13, 71, 461, 3447]
    for n, want in enumerate(expected, start=1):
        assert sum(1 for p in all_perms(n) if is_sum_indecomposable(p)) == want


def test_indecomposability_criteria_agree():
    # connectivity, the 1..n path, and the block decomposition all coincide
    for n in range(1, 8):
        for p in all_perms(n):
            assert is_sum_indecomposable(p) == (len(sum_decomposition(p)) == 1)
            assert is_skew_indecomposable(p) == (len(skew_decomposition(p)) == 1)


def test_sum_and_skew_sums():
    assert direct_sum((1,), (1,)) == (1, 2)
    assert direct_sum((2, 1), (1,)) == (2, 1, 3)
    assert skew_sum((1,), (1, 2)) == (3, 1, 2)
    a, b, c = (2, 1), (1, 3, 2), (1,)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert skew_sum(skew_sum(a, b), c) == skew_sum(a, skew_sum(b, c))


def test_sum_decomposition_blocks():
    p = (2, 1, 3, 5, 4)
    assert sum_decomposition(p) == [(2, 1), (1,), (2, 1)]
    assert direct_sum(direct_sum((2, 1), (1,)), (2, 1)) == p
    assert skew_decomposition((3, 2, 1)) == [(1,), (1,), (1,)]


def test_symmetry_examples():
    assert symmetry((1, 2, 3), "reverse") == (3, 2, 1)
    assert symmetry((2, 4, 1, 3), "inverse") == (3, 1, 4, 2)
    assert all_symmetries((2, 5, 3, 1, 4)) == {(2, 5, 3, 1, 4), (4, 1, 3, 5, 2)}


def test_symmetry_group_laws():
    for n in range(7):
        for p in all_perms(n):
            assert reverse(reverse(p)) == p
            assert complement(complement(p)) == p
            assert inverse(inverse(p)) == p
            assert reverse(complement(p)) == complement(reverse(p))
            assert symmetry(symmetry(p, "rotate90"), "rotate270") == p
            r180 = symmetry(p, "rotate180")
            assert symmetry(symmetry(r180, "rotate180"), "id") == p
            assert symmetry(p, "antidiagonal") == inverse(complement(reverse(p)))


def test_symmetry_orbits_close():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(1, 7)
        p = tuple(rng.sample(range(1, n + 1), n))
        orbit = all_symmetries(p)
        for q in orbit:
            assert all_symmetries(q) == orbit
        assert len(orbit) in (1, 2, 4, 8)


def test_containment_partial_order():
    for n in range(8):
        for p in all_perms(n):
            assert contains(p, p)
    # equal length: mutual containment forces equality
    for n in range(5):
        for p, q in itertools.combinations(all_perms(n), 2):
            assert not (contains(p, q) and contains(q, p))
    # transitivity along random chains sigma <= tau <= target
    rng = random.Random(99)
    for _ in range(300):
        target = tuple(rng.sample(range(1, 11), 10))
        mid_pos = sorted(rng.sample(range(10), 6))
        mid = standardize([target[i] for i in mid_pos])
        low_pos = sorted(rng.sample(range(6), 3))
        low = standardize([mid[i] for i in low_pos])
        assert contains(mid, target)
        assert contains(low, mid)
        assert contains(low, target)


def test_witness_preserves_inversions():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randrange(4, 10)
        target = tuple(rng.sample(range(1, n + 1), n))
        k = rng.randrange(2, 5)
        pattern = tuple(rng.sample(range(1, k + 1), k))
        w = find_embedding(pattern, target)
        if w is None:
            continue
        gp = perm_graph(pattern)
        gt = perm_graph(target)
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                assert ((a, b) in gp.edges) == ((w[a - 1], w[b - 1]) in gt.edges)


def test_standardize():
    assert standardize((9, 1, 6, 7, 2)) == (5, 1, 3, 4, 2)
    assert standardize(()) == ()
    for n in range(6):
        for p in all_perms(n):
            assert standardize(p) == p
            assert is_perm(p)
