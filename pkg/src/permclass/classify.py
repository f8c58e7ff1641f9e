"""The catalogue of growth rates below kappa and the threshold decision.

Every growth rate below kappa is 0 or the largest root of a polynomial
drawn from six parametric families, indexed by the sequence of sum
indecomposables of a sum closed class.  This module builds those
polynomials, certifies their roots, decides whether a formal
indecomposable sequence forces growth at least kappa, and runs the
membership checks that separate classes with growth below kappa from
those that provably reach it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import AvClass, avoids
from .genfun import (
    ONE,
    X,
    AlgebraicNumber,
    Poly,
    RationalGF,
    algebraic_compare,
    algebraic_equal,
    algebraic_number,
    kappa,
    largest_positive_root,
    nu,
    parse_poly,
    pringsheim_growth,
    rational_gf,
)
from .grid import GridMatrix, format_matrix, grid_member, is_D_griddable, parse_matrix
from .perm import SYMMETRY_NAMES, format_perm, symmetry
from .witnesses import OSC_CLOSURE_BASIS, basis_WO

__all__ = [
    "FAMILIES",
    "HOOK_TRIPLE_MATRICES",
    "LINEAR_TRIPLE_MATRICES",
    "THREE_ONE_MATRICES",
    "AccumulationReport",
    "GrowthRateEntry",
    "KappaVerdict",
    "SequenceSpec",
    "accumulation_scan",
    "decide_sub_kappa",
    "family_poly",
    "family_value",
    "is_large",
    "kappa",
    "list_subkappa_rates",
    "nu",
    "seq_to_gf",
]


FAMILIES = ("I", "II", "III", "IV", "V", "VI")

THREE_ONE_MATRICES = (
    parse_matrix("sumcl(21), inc"),
    parse_matrix("sumcl(21), dec"),
)
LINEAR_TRIPLE_MATRICES = tuple(
    parse_matrix(text)
    for text in ("inc, inc, inc", "inc, inc, dec", "inc, dec, inc", "inc, dec, dec")
)
HOOK_TRIPLE_MATRICES = tuple(
    parse_matrix(text)
    for text in (
        "inc, 0\ninc, inc",
        "inc, 0\ninc, dec",
        "dec, 0\ninc, dec",
        "inc, 0\ndec, inc",
        "inc, 0\ndec, dec",
        "dec, 0\ndec, dec",
    )
)


@dataclass(frozen=True)
class SequenceSpec:
    """A formal sequence of sum-indecomposable counts, by length from 1.

    ``tail`` repeats forever after the prefix; None ends the sequence.
    Realizability by an actual class is not assumed.
    """

    prefix: tuple[int, ...] = ()
    tail: int | None = None

    def __post_init__(self) -> None:
        if any(not isinstance(s, int) or s < 0 for s in self.prefix):
            raise ValueError("prefix counts must be nonnegative integers")
        if self.tail is not None and (not isinstance(self.tail, int) or self.tail < 0):
            raise ValueError("tail must be None or a nonnegative integer")


@dataclass(frozen=True)
class GrowthRateEntry:
    """One catalogue value: its family, parameters, polynomial and root."""

    family: str
    k: int | None
    ell: int | None
    poly: Poly
    value: AlgebraicNumber


@dataclass(frozen=True)
class KappaVerdict:
    """Outcome of the growth-threshold decision.

    ``verdict`` is "lt-kappa" or "ge-kappa"; a ge-kappa verdict names the
    failing condition and the offending permutation or family, while
    ``passed`` lists the conditions that held.  Truthiness means the class
    stayed below the threshold.
    """

    verdict: str
    witness: tuple[str, str] | None
    passed: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.verdict not in ("lt-kappa", "ge-kappa"):
            raise ValueError("verdict must be lt-kappa or ge-kappa")
        if (self.verdict == "ge-kappa") != (self.witness is not None):
            raise ValueError("exactly the ge-kappa verdict carries a witness")

    def __bool__(self) -> bool:
        return self.verdict == "lt-kappa"


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ValueError(message)


def family_poly(family: str, k: int | None = None, ell: int | None = None) -> Poly:
    """The defining polynomial of a catalogue family; the growth rate is
    its largest positive root.

    >>> print(family_poly("I", 2))
    1 - 2*x^2 + x^3
    >>> print(family_poly("II"))
    2 - x
    >>> print(family_poly("V", 1, 1))
    1 + x - x^2 - 2*x^4 + x^5
    """
    if family == "I":
        _require(k is not None and k >= 1 and ell is None, "family I takes k >= 1")
        return ONE - X**k * 2 + X ** (k + 1)
    if family == "II":
        _require(k is None and ell is None, "family II takes no parameters")
        return ONE * 2 - X
    if family == "III":
        _require(k is not None and k >= 0 and ell is None, "family III takes k >= 0")
        return ONE * 3 - X - X ** (k + 1) + X ** (k + 4) - X ** (k + 3) * 2
    if family == "IV":
        _require(k is not None and k >= 0 and ell is None, "family IV takes k >= 0")
        return ONE + X * 2 - X**2 - X ** (k + 2) + X ** (k + 5) - X ** (k + 4) * 2
    if family == "V":
        _require(
            k is not None and k >= 0 and ell is not None and ell >= 1,
            "family V takes k >= 0 and ell >= 1",
        )
        return ONE + X**ell - X ** (k + ell) - X ** (k + ell + 2) * 2 + X ** (k + ell + 3)
    if family == "VI":
        _require(k is not None and k >= 0 and ell is None, "family VI takes k >= 0")
        return ONE - X**k - X ** (k + 2) * 2 + X ** (k + 3)
    raise ValueError(f"unknown family {family!r}")


def family_value(family: str, k: int | None = None, ell: int | None = None) -> AlgebraicNumber:
    """Certified growth rate of one catalogue entry."""
    return largest_positive_root(family_poly(family, k, ell))


def seq_to_gf(spec: SequenceSpec) -> RationalGF:
    """Generating function 1/(1 - sum s_n x^n) of the sum closure whose
    indecomposable counts are the given sequence.

    >>> print(seq_to_gf(SequenceSpec((), 1)))
    (1 - x) / (1 - 2*x)
    >>> print(seq_to_gf(SequenceSpec()))
    1
    """
    core = ONE
    for i, s in enumerate(spec.prefix, start=1):
        core = core - X**i * s
    if spec.tail is None:
        return rational_gf(ONE, core)
    p = len(spec.prefix)
    den = (ONE - X) * core - X ** (p + 1) * spec.tail
    return rational_gf(ONE - X, den)


def is_large(spec: SequenceSpec) -> bool:
    """Whether the sequence forces growth at least kappa, decided by
    certified interval comparison.

    >>> is_large(SequenceSpec((1, 1, 2, 2, 2, 4)))
    True
    >>> is_large(SequenceSpec((1, 1, 1, 1, 1)))
    False
    """
    gf = seq_to_gf(spec)
    if gf.den.degree < 1:
        return False
    return algebraic_compare(pringsheim_growth(gf), kappa()) >= 0


_ZERO_POLY = parse_poly("x")


def _zero_entry() -> GrowthRateEntry:
    value = algebraic_number(_ZERO_POLY, Fraction(-1, 2), Fraction(1, 2))
    return GrowthRateEntry("0", None, None, _ZERO_POLY, value)


def _catalogue_raw(max_k: int, max_ell: int) -> list[GrowthRateEntry]:
    entries = [_zero_entry()]
    for k in range(1, max_k + 1):
        entries.append(GrowthRateEntry("I", k, None, family_poly("I", k), family_value("I", k)))
    entries.append(GrowthRateEntry("II", None, None, family_poly("II"), family_value("II")))
    for fam in ("III", "IV"):
        for k in range(max_k + 1):
            entries.append(GrowthRateEntry(fam, k, None, family_poly(fam, k), family_value(fam, k)))
    for k in range(max_k + 1):
        for ell in range(1, max_ell + 1):
            entries.append(
                GrowthRateEntry("V", k, ell, family_poly("V", k, ell), family_value("V", k, ell))
            )
    for k in range(max_k + 1):
        entries.append(GrowthRateEntry("VI", k, None, family_poly("VI", k), family_value("VI", k)))
    return entries


def list_subkappa_rates(max_k: int, max_ell: int) -> list[GrowthRateEntry]:
    """All catalogue values with parameters within the bounds: 0 plus the
    six families, deduplicated by algebraic equality and sorted ascending.

    Values are ordered by high-precision approximation first and every
    neighbouring pair is then certified, so float comparison is never the
    final word.
    """
    _require(max_k >= 1 and max_ell >= 1, "bounds must be at least 1")
    entries = _catalogue_raw(max_k, max_ell)
    entries.sort(key=lambda e: e.value.refine(Fraction(1, 10**12)).midpoint())
    kept: list[GrowthRateEntry] = []
    for entry in entries:
        if kept and algebraic_equal(kept[-1].value, entry.value):
            continue
        kept.append(entry)
    for left, right in zip(kept, kept[1:]):
        if algebraic_compare(left.value, right.value) >= 0:
            raise AssertionError("catalogue sort is not strictly increasing")
    return kept


def _first_missing_symmetry(c: AvClass, matrix: GridMatrix) -> str | None:
    """A symmetry of the grid class met by no basis element, if any.

    Testing the symmetric image of each basis element against the fixed
    matrix is equivalent to testing the element against the symmetric
    matrix, and needs no matrix transforms.
    """
    for sym in SYMMETRY_NAMES:
        if not any(grid_member(symmetry(b, sym), matrix) for b in c.basis):
            return sym
    return None


def _dec_closure_member(p) -> bool:
    return avoids(symmetry(p, "reverse"), OSC_CLOSURE_BASIS)


def decide_sub_kappa(c: AvClass) -> KappaVerdict:
    """Decide whether the finitely based class has growth below kappa.

    Checks run in order: containment of all increasing then all
    decreasing oscillations, then griddability by the wedge classes of
    the oscillation basis, then containment of a symmetry of a canonical
    alternation grid class.  Any failure proves growth at least kappa and
    is returned with its witness; passing everything yields lt-kappa with
    the list of conditions checked.  The order only picks the reported
    witness; the verdict is the same however the checks are arranged.

    >>> from .classes import av
    >>> decide_sub_kappa(av("21")).verdict
    'lt-kappa'
    >>> bool(decide_sub_kappa(av("123")))
    False
    """
    if c.is_all:
        raise ValueError("the class of all permutations is not small")
    passed: list[str] = []

    if not any(avoids(b, OSC_CLOSURE_BASIS) for b in c.basis):
        witness = ("contains all increasing oscillations", "no basis element embeds in one")
        return KappaVerdict("ge-kappa", witness, tuple(passed))
    passed.append("some basis element embeds in an increasing oscillation")

    if not any(_dec_closure_member(b) for b in c.basis):
        witness = ("contains all decreasing oscillations", "no basis element embeds in one")
        return KappaVerdict("ge-kappa", witness, tuple(passed))
    passed.append("some basis element embeds in a decreasing oscillation")

    report = is_D_griddable(c, basis_WO())
    if not report:
        detail = f"{format_perm(report.witness)} ({report.direction} closure escapes)"
        return KappaVerdict("ge-kappa", ("not griddable by the oscillation wedge", detail), tuple(passed))
    passed.append("griddable by the oscillation wedge")

    groups = (
        ("three-one alternation class", THREE_ONE_MATRICES),
        ("linear triple class", LINEAR_TRIPLE_MATRICES),
        ("hook triple class", HOOK_TRIPLE_MATRICES),
    )
    for label, matrices in groups:
        for matrix in matrices:
            sym = _first_missing_symmetry(c, matrix)
            if sym is not None:
                flat = format_matrix(matrix).replace("\n", " / ")
                witness = (f"contains a {label}", f"symmetry {sym} of [{flat}]")
                return KappaVerdict("ge-kappa", witness, tuple(passed))
        passed.append(f"basis meets every {label}")
    return KappaVerdict("lt-kappa", None, tuple(passed))


@dataclass(frozen=True)
class AccumulationReport:
    """Certified monotone-accumulation evidence for the V and VI families.

    Per k, the family V values increase in ell and stay below the family
    VI value at the same k; the family VI values increase in k and stay
    below kappa.  Gaps are decimal approximations of the remaining
    distance at the scan bounds.
    """

    k_max: int
    ell_max: int
    v_monotone: bool
    v_below_vi: bool
    v_gaps: tuple[float, ...]
    vi_monotone: bool
    vi_below_kappa: bool
    kappa_gap: float

    @property
    def ok(self) -> bool:
        return self.v_monotone and self.v_below_vi and self.vi_monotone and self.vi_below_kappa


def accumulation_scan(k_max: int, ell_max: int) -> AccumulationReport:
    """Verify that family V values accumulate at family VI values, which
    accumulate at kappa, using certified comparisons throughout."""
    _require(k_max >= 2 and ell_max >= 2, "bounds must be at least 2")
    v_monotone = True
    v_below_vi = True
    gaps = []
    for k in range(1, k_max + 1):
        limit = family_value("VI", k)
        previous = None
        for ell in range(1, ell_max + 1):
            value = family_value("V", k, ell)
            if previous is not None and algebraic_compare(previous, value) >= 0:
                v_monotone = False
            if algebraic_compare(value, limit) >= 0:
                v_below_vi = False
            previous = value
        gaps.append(float(limit) - float(previous))
    vi_monotone = True
    vi_below_kappa = True
    previous = None
    top = kappa()
    for k in range(1, k_max + 1):
        value = family_value("VI", k)
        if previous is not None and algebraic_compare(previous, value) >= 0:
            vi_monotone = False
        if algebraic_compare(value, top) >= 0:
            vi_below_kappa = False
        previous = value
    return AccumulationReport(
        k_max=k_max,
        ell_max=ell_max,
        v_monotone=v_monotone,
        v_below_vi=v_below_vi,
        v_gaps=tuple(gaps),
        vi_monotone=vi_monotone,
        vi_below_kappa=vi_below_kappa,
        kappa_gap=float(top) - float(previous),
    )
