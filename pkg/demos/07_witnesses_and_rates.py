"""
Witness families and the growth rate threshold
==============================================

Classes with growth rate under the cubic threshold are structured;
crossing it takes one of a short list of witness configurations.  This
script builds the witnesses and runs the decision procedure.
"""

from permclass.classes import av, normalize_basis
from permclass.classify import (
    accumulation_scan,
    decide_sub_kappa,
    kappa,
    list_subkappa_rates,
)
from permclass.perm import format_perm
from permclass.witnesses import (
    ALTERNATION_FAMILIES,
    alternation,
    increasing_oscillations,
    u_antichain,
)

# oscillations are the simple permutations whose graph is a path
print("increasing oscillations of length 6:")
for p in increasing_oscillations(6):
    print(" ", format_perm(p))

# one member from each alternation family
print()
for fam in ALTERNATION_FAMILIES:
    print(f"{fam:>13}: {format_perm(alternation(fam, 2))}")

# the antichain members certify uncountably many subclasses
print()
print("antichain members 1..4:")
for m in range(1, 5):
    print(" ", format_perm(u_antichain(m)))

# the decision procedure: verdict plus a human readable witness
for basis in (("21",), ("123",), ("321", "3412", "4123", "2341")):
    r = decide_sub_kappa(av(*basis))
    tag = " ".join(basis)
    if r:
        print(f"Av({tag}): growth below threshold")
    else:
        print(f"Av({tag}): at or above threshold, witness {r.witness[0]}")

# every achievable growth rate below the threshold, for small indices
print()
print("achievable rates with small parameters:")
for e in list_subkappa_rates(3, 3)[:8]:
    label = e.family if e.k is None else f"{e.family}({e.k},{e.ell})"
    print(f"  {label:>10}  {e.value.approx_str(6)}")

# the rates accumulate at the threshold from below
rep = accumulation_scan(9, 9)
print()
print("scan up to index 9: ordered and bounded:", rep.ok)
print("gap below kappa:", f"{rep.kappa_gap:.2e}", "with kappa =", kappa().approx_str(6))
