"""
Rational series and certified algebraic growth rates
====================================================

Growth rates here are exact algebraic numbers: a polynomial plus an
isolating interval with rational endpoints.  Nothing below uses
floating point until the final printout.
"""

from fractions import Fraction

from permclass.classify import kappa, nu
from permclass.genfun import (
    algebraic_equal,
    largest_positive_root,
    parse_poly,
    pringsheim_growth,
    rational_gf,
    series,
)

# a rational generating function expands to its coefficient sequence
gf = rational_gf(parse_poly("1-x"), parse_poly("1-2x-x^3"))
print("series:", series(gf, 10))

# the growth rate is the reciprocal of the smallest pole
rho = pringsheim_growth(gf)
print("growth rate bracketed by", rho.lo, "and", rho.hi)
print("to twelve places:", rho.refine(Fraction(1, 10**13)).approx_str(12))

# the same number as the largest positive root of a cubic
k = largest_positive_root(parse_poly("1+2x^2-x^3"))
print("cubic root equals series growth:", algebraic_equal(rho, k))
print("matches the built-in threshold:", algebraic_equal(k, kappa()))

# intervals refine on demand; each call certifies a tighter bracket
tight = k.refine(Fraction(1, 10**30))
print()
print("thirty digit bracket width:", float(tight.hi - tight.lo))

# the second threshold is a quartic root a little below the first
print()
print("kappa =", kappa().approx_str(9))
print("nu    =", nu().approx_str(9))
print("nu < kappa:", float(nu()) < float(kappa()))

# golden ratio sanity check: Fibonacci growth
fib = rational_gf(parse_poly("1"), parse_poly("1-x-x^2"))
print()
print("Fibonacci series:", series(fib, 9))
print("phi =", pringsheim_growth(fib).approx_str(9))
