"""
Exact univariate polynomials, rational generating functions, and certified
real algebraic numbers.

Polynomials have arbitrary-precision integer coefficients stored in ascending
degree.  Rational generating functions are reduced fractions of polynomials.
Growth rates are returned as algebraic numbers: a defining polynomial plus an
exact rational interval certified (by a sign change and a Sturm count) to
contain exactly one real root.  No floating point enters any decision; floats
appear only in display helpers.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

QList = list[Fraction]


@dataclass(frozen=True)
class Poly:
    """Integer-coefficient polynomial, coefficients ascending, normalized."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: Poly | int) -> Poly:
        o = _as_poly(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (o.coeffs[i] if i < len(o.coeffs) else 0)
                for i in range(n)
            )
        )

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: Poly | int) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        o = _as_poly(other)
        if self.is_zero or o.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Fraction | int) -> Fraction | int:
        out: Fraction | int = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self) -> Poly:
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reciprocal(self) -> Poly:
        """Coefficients reversed: x^deg * p(1/x).  Roots become reciprocals."""
        return Poly(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return format_poly(self)


X = Poly((0, 1))
ONE = Poly((1,))


def _as_poly(v: Poly | int) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly((v,))


_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(?:(\d+)\s*\*?\s*)?(x)?(?:\s*\^\s*(\d+))?\s*"
)


def parse_poly(text: str) -> Poly:
    """
    Parse either the term form `c0 + c1*x + c2*x^2` (the `*` is optional, as
    in `1-2x-x^3`) or the coefficient-list form `[c0,c1,...]`.

    >>> parse_poly("1-2x-x^3")
    Poly(coeffs=(1, -2, 0, -1))
    >>> parse_poly("[1,-2,0,-1]")
    Poly(coeffs=(1, -2, 0, -1))
    >>> parse_poly("x^2") == X ** 2
    True
    >>> parse_poly("0")
    Poly(coeffs=())
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated list form: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return Poly()
        return Poly(tuple(int(t) for t in inner.split(",")))
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            exp = 0
            if m.group(4) is not None:
                raise ValueError(f"exponent without x near {text[pos:]!r}")
        else:
            exp = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly(tuple(out))


def format_poly(p: Poly) -> str:
    """
    Term form, round-tripping through parse_poly.

    >>> format_poly(Poly((1, -2, 0, -1)))
    '1 - 2*x - x^3'
    >>> format_poly(Poly())
    '0'
    >>> format_poly(parse_poly("x"))
    'x'
    """
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_poly_list(p: Poly) -> str:
    """
    Coefficient-list form.

    >>> format_poly_list(parse_poly("1-2x-x^3"))
    '[1,-2,0,-1]'
    """
    return "[" + ",".join(str(c) for c in p.coeffs) + "]"


# ---------------------------------------------------------------------------
# exact polynomial gcd


def _content(p: Poly) -> int:
    g = 0
    for c in p.coeffs:
        g = _gcd_int(g, abs(c))
    return g


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _primitive(p: Poly) -> Poly:
    """Divide out the integer content; sign of the leading coefficient kept."""
    if p.is_zero:
        return p
    g = _content(p)
    return Poly(tuple(c // g for c in p.coeffs))


def _qtrim(c: QList) -> QList:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a: QList, b: QList) -> tuple[QList, QList]:
    # Long division of Fraction-coefficient polynomials, ascending lists.
    assert b, "division by the zero polynomial"
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(rem) >= len(b) and _qtrim(rem):
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, bc in enumerate(b):
            rem[shift + i] -= factor * bc
        rem.pop()
    return _qtrim(quo), _qtrim(rem)


def _to_q(p: Poly) -> QList:
    return [Fraction(c) for c in p.coeffs]


def _from_q_primitive(c: QList) -> Poly:
    # Scale a rational polynomial by a positive rational to primitive integer
    # coefficients, preserving all signs.
    if not c:
        return Poly()
    denom_lcm = 1
    for v in c:
        denom_lcm = denom_lcm * v.denominator // _gcd_int(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in c]
    return _primitive(Poly(tuple(ints)))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    Greatest common divisor in the integers, content included, normalized to
    a positive leading coefficient.

    >>> poly_gcd(parse_poly("1-2x^2+x^3"), parse_poly("-1+x"))
    Poly(coeffs=(-1, 1))
    >>> poly_gcd(parse_poly("2+2x"), parse_poly("4"))
    Poly(coeffs=(2,))
    """
    if a.is_zero:
        return _abs_leading(b)
    if b.is_zero:
        return _abs_leading(a)
    ca, cb = _content(a), _content(b)
    x, y = _to_q(_primitive(a)), _to_q(_primitive(b))
    while y:
        _, r = _qdivmod(x, y)
        x, y = y, r
    prim = _from_q_primitive(x)
    return _abs_leading(prim * _gcd_int(ca, cb))


def _abs_leading(p: Poly) -> Poly:
    return -p if p.leading < 0 else p


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact division; raises if b does not divide a over the integers."""
    quo, rem = _qdivmod(_to_q(a), _to_q(b))
    if rem:
        raise ValueError("inexact polynomial division")
    if any(v.denominator != 1 for v in quo):
        raise ValueError("quotient not integral")
    return Poly(tuple(int(v) for v in quo))


def squarefree_part(p: Poly) -> Poly:
    """p with repeated factors collapsed: p / gcd(p, p'), primitive."""
    if p.degree <= 0:
        return _abs_leading(_primitive(p)) if not p.is_zero else p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return _abs_leading(_primitive(p))
    return _abs_leading(_primitive(poly_divexact_q(p, g)))


def poly_divexact_q(a: Poly, b: Poly) -> Poly:
    # Division known exact over Q; result scaled to primitive integers.
    quo, rem = _qdivmod(_to_q(a), _to_q(b))
    assert not rem
    return _from_q_primitive(quo)


# ---------------------------------------------------------------------------
# rational generating functions


@dataclass(frozen=True)
class RationalGF:
    """Reduced fraction of integer polynomials with an invertible denominator."""

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        if self.den.constant_term == 0:
            raise ValueError("denominator constant term must be nonzero")

    def __add__(self, other: RationalGF | Poly | int) -> RationalGF:
        o = _as_gf(other)
        return rational_gf(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalGF:
        return RationalGF(-self.num, self.den)

    def __sub__(self, other: RationalGF | Poly | int) -> RationalGF:
        return self + (-_as_gf(other))

    def __rsub__(self, other: Poly | int) -> RationalGF:
        return _as_gf(other) - self

    def __mul__(self, other: RationalGF | Poly | int) -> RationalGF:
        o = _as_gf(other)
        return rational_gf(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalGF | Poly | int) -> RationalGF:
        o = _as_gf(other)
        return rational_gf(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Poly | int) -> RationalGF:
        return _as_gf(other) / self

    def __str__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def _as_gf(v: RationalGF | Poly | int) -> RationalGF:
    if isinstance(v, RationalGF):
        return v
    return RationalGF(_as_poly(v), ONE)


def rational_gf(num: Poly | int, den: Poly | int = 1) -> RationalGF:
    """
    Build a reduced RationalGF; the denominator's constant term is made
    positive so equal functions compare equal.

    >>> rational_gf(parse_poly("2-2x"), parse_poly("2"))
    RationalGF(num=Poly(coeffs=(1, -1)), den=Poly(coeffs=(1,)))
    >>> str(rational_gf(parse_poly("1-x^2"), parse_poly("1-x")))
    '1 + x'
    """
    n, d = _as_poly(num), _as_poly(den)
    if d.is_zero:
        raise ValueError("zero denominator")
    if n.is_zero:
        return RationalGF(Poly(), ONE)
    g = poly_gcd(n, d)
    if g.degree > 0 or g.constant_term not in (0, 1):
        n = poly_divexact(n, g)
        d = poly_divexact(d, g)
    if d.constant_term < 0:
        n, d = -n, -d
    return RationalGF(n, d)


def series(gf: RationalGF | Poly, nmax: int) -> list[int]:
    """
    The first nmax+1 Taylor coefficients, by the recurrence the denominator
    imposes on them.

    >>> series(rational_gf(ONE, parse_poly("1-x")), 4)
    [1, 1, 1, 1, 1]
    >>> series(rational_gf(ONE, parse_poly("1-x-x^2-x^3")), 6)
    [1, 1, 2, 4, 7, 13, 24]
    >>> series(rational_gf(parse_poly("1-x"), parse_poly("1-2x-x^3")), 8)
    [1, 1, 2, 5, 11, 24, 53, 117, 258]
    """
    g = _as_gf(gf)
    den = g.den.coeffs
    num = g.num.coeffs
    out: list[Fraction] = []
    for k in range(nmax + 1):
        acc = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    if any(v.denominator != 1 for v in out):
        raise ValueError("series is not integral")
    return [int(v) for v in out]


def sum_completion_gf(f: RationalGF | Poly) -> RationalGF:
    """
    The generating function 1/(1-f) of the closure under direct sums of a set
    of sum-indecomposables counted by f.

    >>> str(sum_completion_gf(parse_poly("x+x^2+x^3")))
    '(1) / (1 - x - x^2 - x^3)'
    >>> str(sum_completion_gf(Poly()))
    '1'

    The denominator 1 - 2x - x^3 + x^k + x^(k+1) always vanishes at x = 1,
    so the textbook display of the k-th completion below loses a factor of
    1 - x to reduction:

    >>> k = 5
    >>> f = rational_gf(parse_poly(f"x+x^3-x^{k}-x^{k+1}"), parse_poly("1-x"))
    >>> str(sum_completion_gf(f))
    '(1) / (1 - x - x^2 - 2*x^3 - 2*x^4 - x^5)'
    >>> series(sum_completion_gf(f), 6) == series(
    ...     rational_gf(parse_poly("1-x"), parse_poly("1-2x-x^3+x^5+x^6")), 6)
    True
    """
    g = _as_gf(f)
    if g.num.constant_term != 0:
        raise ValueError("indecomposables must not count the empty permutation")
    return rational_gf(g.den, g.den - g.num)


# ---------------------------------------------------------------------------
# Sturm sequences and certified real roots


def _sturm_chain(p: Poly) -> list[Poly]:
    # p must be squarefree.  Remainders are rescaled to primitive integers,
    # which preserves signs and so the variation counts.
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        _, rem = _qdivmod(_to_q(chain[-2]), _to_q(chain[-1]))
        if not rem:
            break
        chain.append(-_from_q_primitive(rem) if rem[-1] > 0 else _from_q_primitive([-v for v in rem]))
    return [q for q in chain if not q.is_zero]


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain: list[Poly], lo: Fraction, hi: Fraction) -> int:
    # Distinct real roots in (lo, hi]; requires p(lo) != 0.
    return _variations(chain, lo) - _variations(chain, hi)


def cauchy_bound(p: Poly) -> Fraction:
    """All complex roots have modulus strictly below this."""
    if p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), abs(p.leading))


@dataclass(frozen=True)
class AlgebraicNumber:
    """
    A real algebraic number: a squarefree primitive defining polynomial and
    an open rational interval holding exactly one of its real roots, with a
    sign change at the endpoints.
    """

    poly: Poly
    lo: Fraction
    hi: Fraction

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, eps: Fraction | float) -> AlgebraicNumber:
        """A nested interval of width at most eps around the same root."""
        target = Fraction(eps).limit_denominator(10**30) if not isinstance(eps, Fraction) else eps
        lo, hi = self.lo, self.hi
        while hi - lo > target:
            lo, hi = _bisect_once(self.poly, lo, hi)
        return AlgebraicNumber(self.poly, lo, hi)

    def __float__(self) -> float:
        a = self.refine(Fraction(1, 10**17))
        return float(a.midpoint())

    def approx_str(self, places: int = 6) -> str:
        """Decimal string correct to the given number of places."""
        a = self.refine(Fraction(1, 10 ** (places + 2)))
        scaled = a.midpoint() * 10**places
        return f"{float(a.midpoint()):.{places}f}" if places else str(round(scaled))

    def __str__(self) -> str:
        return self.approx_str()


def _bisect_once(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    mid = (lo + hi) / 2
    v = p(mid)
    if v == 0:
        # mid is the root itself; shrink to a window inside (lo, hi) around it
        delta = (hi - lo) / 4
        assert p(mid - delta) * p(mid + delta) < 0
        return mid - delta, mid + delta
    if (v > 0) == (p(lo) > 0):
        return mid, hi
    return lo, mid


def algebraic_number(p: Poly, lo: Fraction, hi: Fraction) -> AlgebraicNumber:
    """Certify and build: exactly one root of p in (lo, hi), sign change."""
    sf = squarefree_part(p)
    if sf.degree < 1:
        raise ValueError("no roots: constant polynomial")
    if not (sf(lo) * sf(hi) < 0):
        raise ValueError("no sign change over the interval")
    chain = _sturm_chain(sf)
    count = _count_roots(chain, lo, hi)
    if count != 1:
        raise ValueError(f"interval holds {count} roots, not 1")
    return AlgebraicNumber(sf, Fraction(lo), Fraction(hi))


def real_roots(p: Poly) -> list[AlgebraicNumber]:
    """
    All distinct real roots, each certified, in increasing order.

    >>> [float(r) for r in real_roots(parse_poly("x^2-2"))]
    [-1.4142135623730951, 1.4142135623730951]
    >>> real_roots(parse_poly("1+x^2"))
    []
    """
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    chain = _sturm_chain(sf)
    bound = cauchy_bound(sf)
    found: list[tuple[Fraction, Fraction]] = []

    def split(lo: Fraction, hi: Fraction) -> None:
        # Invariant: sf(lo) != 0 and sf(hi) != 0.
        n = _count_roots(chain, lo, hi)
        if n == 0:
            return
        if n == 1:
            assert sf(lo) * sf(hi) < 0
            found.append((lo, hi))
            return
        mid = (lo + hi) / 2
        shift = (hi - lo) / 1024
        while sf(mid) == 0:
            mid += shift
            shift /= 2
        split(lo, mid)
        split(mid, hi)

    split(-bound, bound)
    found.sort()
    return [AlgebraicNumber(sf, lo, hi) for lo, hi in found]


def positive_roots(p: Poly) -> list[AlgebraicNumber]:
    """Certified roots > 0, increasing; x = 0 factors are discarded."""
    coeffs = p.coeffs
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    stripped = Poly(coeffs)
    out = []
    for r in real_roots(stripped):
        if r.hi <= 0:
            continue
        if r.lo < 0:
            # interval straddles zero: the root has a sign; test which side
            chain = _sturm_chain(r.poly)
            if _count_roots(chain, Fraction(0), r.hi) == 0:
                continue
            r = AlgebraicNumber(r.poly, Fraction(0), r.hi)
        out.append(r)
    return out


def largest_positive_root(p: Poly) -> AlgebraicNumber:
    """
    The largest real root > 0, certified.

    >>> float(largest_positive_root(parse_poly("1+2x+x^2+x^3-x^4")))
    2.0659948...
    >>> float(largest_positive_root(parse_poly("2-x")))
    2.0
    >>> float(largest_positive_root(parse_poly("1-2x^2+x^3")))
    1.618033...
    """
    roots = positive_roots(p)
    if not roots:
        raise ValueError("no positive real root")
    return roots[-1]


def smallest_positive_root(p: Poly) -> AlgebraicNumber:
    """The smallest real root > 0, certified."""
    roots = positive_roots(p)
    if not roots:
        raise ValueError("no positive real root")
    return roots[0]


def pringsheim_growth(gf: RationalGF) -> AlgebraicNumber:
    """
    The growth rate of the coefficient sequence: the reciprocal of the
    smallest positive pole, which for a reduced nonnegative rational series
    is its radius of convergence.

    >>> float(pringsheim_growth(rational_gf(parse_poly("1-x"), parse_poly("1-2x-x^3"))))
    2.205569...
    >>> float(pringsheim_growth(rational_gf(ONE, parse_poly("1-x"))))
    1.0
    >>> float(pringsheim_growth(rational_gf(ONE, parse_poly("1-2x-x^2"))))
    2.414213...
    """
    if gf.den.degree < 1:
        raise ValueError("polynomial generating function has no pole")
    # 1/root of den(x) = root of the reversed polynomial; the smallest
    # positive pole becomes the largest positive root.
    return largest_positive_root(gf.den.reciprocal())


@dataclass(frozen=True)
class GrowthEstimate:
    """Numeric growth estimates straight from a counting sequence."""

    nth_root: float
    ratio: float


def empirical_growth(counts: Sequence[int]) -> GrowthEstimate:
    """
    Estimate the growth of a counting sequence by the n-th root of the last
    term and the mean of the last few consecutive ratios.

    >>> empirical_growth([1] * 10)
    GrowthEstimate(nth_root=1.0, ratio=1.0)
    """
    if len(counts) < 3:
        raise ValueError("need at least 3 counts")
    n = len(counts) - 1
    root = counts[n] ** (1 / n) if counts[n] > 0 else 0.0
    ratios = [
        counts[i] / counts[i - 1]
        for i in range(max(1, n - 3), n + 1)
        if counts[i - 1] > 0
    ]
    ratio = sum(ratios) / len(ratios) if ratios else 0.0
    return GrowthEstimate(float(root), float(ratio))


# ---------------------------------------------------------------------------
# exact comparison and sign evaluation


def algebraic_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    """
    Exact equality: a common defining factor must place a root in the
    intersection of the two isolating intervals.

    >>> r2a = largest_positive_root(parse_poly("x^2-2"))
    >>> r2b = smallest_positive_root(parse_poly("x^3-2x^2-2x+4"))
    >>> algebraic_equal(r2a, r2b)
    True
    >>> algebraic_equal(r2a, largest_positive_root(parse_poly("x^3-2x^2-2x+4")))
    False
    """
    g = poly_gcd(a.poly, b.poly)
    if g.degree < 1:
        return False
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo >= hi:
        a = a.refine((a.hi - a.lo) / 4)
        b = b.refine((b.hi - b.lo) / 4)
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo >= hi:
            return False
    sf = squarefree_part(g)
    chain = _sturm_chain(sf)
    while True:
        if sf(lo) != 0 and sf(hi) != 0 and _count_roots(chain, lo, hi) >= 1:
            return True
        # No common root certified in the overlap yet: shrink both and retry
        # until the intervals separate or the overlap pins a shared root.
        a = a.refine((a.hi - a.lo) / 4)
        b = b.refine((b.hi - b.lo) / 4)
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo >= hi:
            return False


def algebraic_compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """-1, 0, or 1 as a < b, a = b, a > b, decided exactly."""
    if algebraic_equal(a, b):
        return 0
    while not (a.hi <= b.lo or b.hi <= a.lo):
        a = a.refine((a.hi - a.lo) / 4)
        b = b.refine((b.hi - b.lo) / 4)
    return -1 if a.hi <= b.lo else 1


def sign_at(p: Poly, alpha: AlgebraicNumber) -> int:
    """
    The sign of p evaluated at an algebraic number, decided exactly.

    >>> kappa = largest_positive_root(parse_poly("1+2x^2-x^3"))
    >>> sign_at(parse_poly("x^2-2"), kappa)
    1
    >>> sign_at(parse_poly("1+2x^2-x^3"), kappa)
    0
    """
    if p.is_zero:
        return 0
    g = poly_gcd(p, alpha.poly)
    if g.degree >= 1:
        sf = squarefree_part(g)
        chain = _sturm_chain(sf)
        lo, hi = alpha.lo, alpha.hi
        if sf(lo) == 0 or sf(hi) == 0:
            alpha = alpha.refine((hi - lo) / 8)
            lo, hi = alpha.lo, alpha.hi
        if _count_roots(chain, lo, hi) >= 1:
            return 0
    sf = squarefree_part(p) if p.degree >= 1 else None
    chain = _sturm_chain(sf) if sf is not None else None
    while True:
        lo, hi = alpha.lo, alpha.hi
        if chain is None or (sf(lo) != 0 and sf(hi) != 0 and _count_roots(chain, lo, hi) == 0):
            v = p(alpha.midpoint())
            if v != 0:
                return 1 if v > 0 else -1
        alpha = alpha.refine((alpha.hi - alpha.lo) / 4)


KAPPA_POLY = parse_poly("1+2x^2-x^3")
NU_POLY = parse_poly("1+2x+x^2+x^3-x^4")


def kappa() -> AlgebraicNumber:
    """
    The unique positive root of 1 + 2x^2 - x^3, about 2.20557.

    >>> kappa().approx_str(5)
    '2.20557'
    """
    return largest_positive_root(KAPPA_POLY)


def nu() -> AlgebraicNumber:
    """
    The unique positive root of 1 + 2x + x^2 + x^3 - x^4, about 2.06599.

    >>> nu().approx_str(5)
    '2.06599'
    """
    return largest_positive_root(NU_POLY)
