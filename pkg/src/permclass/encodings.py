"""Letter encodings of gridded permutations in three small grid geometries.

Three families of gridded permutations admit bijections with regular
languages, which turns their enumeration into transfer-matrix counting:

* a column of two increasing cells, letters ``l`` / ``r`` read by position;
* the hook matrix (increasing cells at bottom-left, bottom-right and
  top-left), letters ``h`` / ``r`` / ``t``, words avoiding the factor ``rt``;
* the matrix with a sum-closed ``sumcl(21)`` cell beside an increasing cell,
  letters ``l`` / ``L`` / ``r`` of weights 1, 2, 1 read bottom to top, where
  ``L`` stands for a value-consecutive 21 block.

Words are plain strings.  Each language carries per-letter weights, and
``count_language`` counts accepted words by total weight with exact integer
arithmetic.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .genfun import ONE, RationalGF, parse_poly, rational_gf
from .grid import Gridding, gridding_valid, parse_matrix
from .perm import Perm, standardize, sum_decomposition

__all__ = [
    "HOOK_MATRIX",
    "PARALLEL_MATRIX",
    "THREE_ONE_MATRIX",
    "WeightedLanguage",
    "accepts",
    "count_language",
    "decode_hook",
    "decode_parallel",
    "decode_31",
    "encode_hook",
    "encode_parallel",
    "encode_31",
    "hook_gf",
    "hook_language",
    "parallel_gf",
    "parallel_language",
    "subclass_language_gf",
    "three_one_gf",
    "three_one_language",
    "word_weight",
]


PARALLEL_MATRIX = parse_matrix("inc\ninc")
HOOK_MATRIX = parse_matrix("inc, 0\ninc, inc")
THREE_ONE_MATRIX = parse_matrix("sumcl(21), av(21)")


@dataclass(frozen=True)
class WeightedLanguage:
    """A complete deterministic recognizer plus a positive weight per letter.

    State 0 is the start state.  ``transitions[s][i]`` is the state reached
    from ``s`` on letter ``alphabet[i]``; every state handles every letter,
    so a word is rejected only by ending in a non-accepting state.
    """

    alphabet: tuple[str, ...]
    weights: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]
    accepting: tuple[bool, ...]

    def __post_init__(self) -> None:
        m = len(self.transitions)
        if m == 0 or len(self.accepting) != m:
            raise ValueError("state tables disagree")
        if len(self.alphabet) != len(self.weights) or not self.alphabet:
            raise ValueError("alphabet and weights disagree")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("repeated letter")
        if any(w <= 0 for w in self.weights):
            raise ValueError("letter weights must be positive")
        for row in self.transitions:
            if len(row) != len(self.alphabet) or any(not 0 <= t < m for t in row):
                raise ValueError("transition table is not total")

    def letter_index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} not in alphabet") from None


def word_weight(lang: WeightedLanguage, word: str) -> int:
    """Total weight of a word.

    >>> word_weight(three_one_language(), "LrL")
    5
    """
    return sum(lang.weights[lang.letter_index(c)] for c in word)


def accepts(lang: WeightedLanguage, word: str) -> bool:
    """
    >>> accepts(hook_language(), "trh")
    True
    >>> accepts(hook_language(), "hrt")
    False
    """
    state = 0
    for c in word:
        state = lang.transitions[state][lang.letter_index(c)]
    return lang.accepting[state]


def count_language(lang: WeightedLanguage, nmax: int) -> list[int]:
    """Accepted words by total weight, from weight 0 through nmax.

    Transfer-matrix recursion: every word of weight w ending in state s
    extends by one letter at a time.

    >>> count_language(parallel_language(), 5)
    [1, 2, 4, 8, 16, 32]
    >>> count_language(hook_language(), 5)
    [1, 3, 8, 21, 55, 144]
    >>> count_language(three_one_language(), 5)
    [1, 2, 5, 12, 29, 70]
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    m = len(lang.transitions)
    table = [[0] * m for _ in range(nmax + 1)]
    table[0][0] = 1
    for w in range(nmax + 1):
        row = table[w]
        for s in range(m):
            c = row[s]
            if c == 0:
                continue
            for i, wt in enumerate(lang.weights):
                if w + wt <= nmax:
                    table[w + wt][lang.transitions[s][i]] += c
    return [sum(c for s, c in enumerate(row) if lang.accepting[s]) for row in table]


def parallel_language() -> WeightedLanguage:
    """All words over l, r; every word encodes a gridded permutation."""
    return WeightedLanguage(("l", "r"), (1, 1), ((0, 0),), (True,))


def hook_language() -> WeightedLanguage:
    """Words over h, r, t with no factor ``rt``.

    State 1 remembers that the previous letter was r; a t there leads to
    the dead state 2.
    """
    return WeightedLanguage(
        ("h", "r", "t"),
        (1, 1, 1),
        ((0, 1, 0), (0, 1, 2), (2, 2, 2)),
        (True, True, False),
    )


def three_one_language() -> WeightedLanguage:
    """All words over l, L, r with L carrying weight 2."""
    return WeightedLanguage(("l", "L", "r"), (1, 2, 1), ((0, 0, 0),), (True,))


def parallel_gf() -> RationalGF:
    """1/(1-2x): two unit-weight letters, no restriction."""
    return rational_gf(ONE, parse_poly("1-2x"))


def hook_gf() -> RationalGF:
    """1/(1-3x+x^2): three letters minus the excluded factor rt.

    >>> from .genfun import series
    >>> series(hook_gf(), 4)
    [1, 3, 8, 21, 55]
    """
    return rational_gf(ONE, parse_poly("1-3x+x^2"))


def three_one_gf() -> RationalGF:
    """1/(1-2x-x^2): two unit-weight letters and one of weight two."""
    return rational_gf(ONE, parse_poly("1-2x-x^2"))


def subclass_language_gf(k: int) -> RationalGF:
    """Generating function of words over two letters having fewer than k
    occurrences of the first letter: sum over i < k of x^i / (1-x)^(i+1).

    Proper subclasses of the grid class behind the parallel encoding are
    counted by such generating functions, so their growth never exceeds 1.

    >>> print(subclass_language_gf(1))
    (1) / (1 - x)
    >>> print(subclass_language_gf(2))
    (1) / (1 - 2*x + x^2)
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    x = parse_poly("x")
    omx = ONE - x
    num = sum((x**i * omx ** (k - 1 - i) for i in range(k)), parse_poly("0"))
    return rational_gf(num, omx**k)


def _check_gridding(p: Perm, g: Gridding, matrix, name: str) -> None:
    if not gridding_valid(p, matrix, g):
        raise ValueError(f"not a valid gridding for the {name} matrix")


def encode_parallel(p: Perm, g: Gridding) -> str:
    """Word of the gridded permutation in the column of two increasing cells.

    Letter i records which value band holds p(i): l for the bottom cell,
    r for the top.

    >>> encode_parallel((1, 2, 3), Gridding((1, 4), (1, 4, 4)))
    'lll'
    >>> encode_parallel((2, 3, 1), Gridding((1, 4), (1, 2, 4)))
    'rrl'
    """
    _check_gridding(p, g, PARALLEL_MATRIX, "parallel")
    split = g.rows[1]
    return "".join("l" if v < split else "r" for v in p)


def decode_parallel(word: str) -> tuple[Perm, Gridding]:
    """Inverse of encode_parallel, defined on every word over l, r.

    The j-th l takes value j and the j-th r takes value (number of l's) + j,
    both at the letter's own position.

    >>> decode_parallel("rrl")
    ((2, 3, 1), Gridding(cols=(1, 4), rows=(1, 2, 4)))
    """
    n = len(word)
    a = word.count("l")
    low = iter(range(1, a + 1))
    high = iter(range(a + 1, n + 1))
    out = []
    for c in word:
        if c == "l":
            out.append(next(low))
        elif c == "r":
            out.append(next(high))
        else:
            raise ValueError(f"letter {c!r} not in alphabet")
    return tuple(out), Gridding((1, n + 1), (1, a + 1, n + 1))


def encode_hook(p: Perm, g: Gridding) -> str:
    """Word of a gridded permutation of the hook matrix.

    Entries in the hook cell are h, top cell t, right cell r.  The h/t
    subsequence lists the left column by position, the h/r subsequence lists
    the bottom band by value, and between consecutive h's the t run precedes
    the r run, so the factor rt never occurs.

    >>> encode_hook((1,), Gridding((1, 2, 2), (1, 2, 2)))
    'h'
    >>> encode_hook((2, 1), Gridding((1, 2, 3), (1, 2, 3)))
    'tr'
    >>> encode_hook((4, 2, 5, 1, 3), Gridding((1, 4, 6), (1, 4, 6)))
    'trhtr'
    """
    _check_gridding(p, g, HOOK_MATRIX, "hook")
    c2, r2 = g.cols[1], g.rows[1]
    hook_pos = [i for i, v in enumerate(p, start=1) if i < c2 and v < r2]
    hook_val = sorted(p[i - 1] for i in hook_pos)
    t_gap = [bisect_left(hook_pos, i) for i in range(1, c2) if p[i - 1] >= r2]
    r_gap = sorted(bisect_left(hook_val, v) for v in p[c2 - 1 :] if v < r2)
    parts = []
    for gap in range(len(hook_pos) + 1):
        parts.append("t" * t_gap.count(gap) + "r" * r_gap.count(gap))
        if gap < len(hook_pos):
            parts.append("h")
    return "".join(parts)


def decode_hook(word: str) -> tuple[Perm, Gridding]:
    """Inverse of encode_hook, defined on words over h, r, t without the
    factor rt.

    >>> decode_hook("tr")
    ((2, 1), Gridding(cols=(1, 2, 3), rows=(1, 2, 3)))
    >>> decode_hook("rt")
    Traceback (most recent call last):
        ...
    ValueError: word contains the factor rt
    """
    if "rt" in word:
        raise ValueError("word contains the factor rt")
    if set(word) - set("hrt"):
        raise ValueError("letters must be h, r or t")
    n = len(word)
    left = [c for c in word if c != "r"]
    bottom = [c for c in word if c != "t"]
    a, b = len(left), len(bottom)
    # the i-th bottom letter owns value i; the j-th extra left letter owns
    # position j among 1..a, and top values b+1.. go to the t's in order
    hook_vals = iter(s for s, c in enumerate(bottom, start=1) if c == "h")
    out = [0] * n
    top = b
    for pos, c in enumerate(left, start=1):
        if c == "h":
            out[pos - 1] = next(hook_vals)
        else:
            top += 1
            out[pos - 1] = top
    r_vals = [s for s, c in enumerate(bottom, start=1) if c == "r"]
    for j, v in enumerate(r_vals, start=1):
        out[a + j - 1] = v
    return tuple(out), Gridding((1, a + 1, n + 1), (1, b + 1, n + 1))


def encode_31(p: Perm, g: Gridding) -> str:
    """Word of a gridded permutation of the sumcl(21) / Av(21) matrix, read
    bottom to top by value: l for a singleton block of the left cell, L for
    a 21 block, r for a right entry.

    A 21 block is only encodable when its two values are consecutive in the
    whole permutation; a right entry splitting a block raises ValueError.
    Words therefore biject with a proper subfamily of the gridded
    permutations (12 of the 13 griddings at length 3).

    >>> encode_31((2, 1), Gridding((1, 3, 3), (1, 3)))
    'L'
    >>> encode_31((2, 1, 3), Gridding((1, 3, 4), (1, 4)))
    'Lr'
    >>> encode_31((3, 1, 2), Gridding((1, 3, 4), (1, 4)))
    Traceback (most recent call last):
        ...
    ValueError: 21 block split by a right entry
    """
    _check_gridding(p, g, THREE_ONE_MATRIX, "three-one")
    c2 = g.cols[1]
    left_vals = sorted(p[: c2 - 1])
    blocks = []
    start = 0
    for block in sum_decomposition(standardize(p[: c2 - 1])):
        blocks.append(left_vals[start : start + len(block)])
        start += len(block)
    starts = {vals[0]: len(vals) for vals in blocks}
    left_set = set(left_vals)
    out = []
    v = 1
    n = len(p)
    while v <= n:
        if v in left_set:
            size = starts[v]
            if size == 2 and v + 1 not in left_set:
                raise ValueError("21 block split by a right entry")
            out.append("L" if size == 2 else "l")
            v += size
        else:
            out.append("r")
            v += 1
    return "".join(out)


def decode_31(word: str) -> tuple[Perm, Gridding]:
    """Inverse of encode_31, defined on every word over l, L, r.

    >>> decode_31("Lr")
    ((2, 1, 3), Gridding(cols=(1, 3, 4), rows=(1, 4)))
    >>> decode_31("lr")
    ((1, 2), Gridding(cols=(1, 2, 3), rows=(1, 3)))
    """
    left_seq: list[int] = []
    right_vals: list[int] = []
    v = 0
    for c in word:
        if c == "l":
            left_seq.append(v + 1)
            v += 1
        elif c == "L":
            left_seq.extend((v + 2, v + 1))
            v += 2
        elif c == "r":
            right_vals.append(v + 1)
            v += 1
        else:
            raise ValueError(f"letter {c!r} not in alphabet")
    n = v
    a = len(left_seq)
    return tuple(left_seq + right_vals), Gridding((1, a + 1, n + 1), (1, n + 1))
