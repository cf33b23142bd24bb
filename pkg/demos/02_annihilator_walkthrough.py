"""Constructing and checking an annihilator, end to end, for one cable.

The operator lives in the quantum torus (LM = t^2 ML, acting on sequences
by (Mf)(n) = t^(2n) f(n), (Lf)(n) = f(n+1)).  We build the operator for
the (13,2)-cable of the trefoil, inspect its factors, clear denominators,
and check that it kills the colored Jones sequence exactly.
"""

from ajcable.aj import build_annihilator, evaluate_annihilator_at_minus1
from ajcable.jones import CablingParams, cable_sequence
from ajcable.qtorus import check_annihilation

params = CablingParams(3, 2, 13, 2)
bundle = build_annihilator(params)

print(f"Parameters: {params}")
print(f"Case: {bundle.case_tag}   L-degree: {bundle.P.l_degree()}")

print("\nFactors (skew product, left to right):")
for fac in bundle.factors:
    print(f"  {fac.text()}")

print("\nTwo-step relation data:")
print(f"  torus coefficient a = {bundle.a.text()}")
print(f"  inhomogeneity b: numerator {bundle.b.num.text()}")
print(f"                   denominator {bundle.b.den.text()}")

print("\nDenominator-free chain (applied right factor first):")
for op in bundle.cleared_chain():
    print(f"  {op.text()}")

report = check_annihilation(bundle.cleared_chain(), cable_sequence(params), 1, 12)
print(f"\nAnnihilates J_C,n for n in [1,12]: {report['pass']}")

print("\nOperator specialized at t = -1 (classical side):")
print(f"  {evaluate_annihilator_at_minus1(bundle).text()}")
