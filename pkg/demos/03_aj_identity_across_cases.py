"""The AJ identity P(-1, M, L) = A_C(M, L) across all four regimes.

One representative tuple per construction regime.  The comparison is
projective: all coefficient pairs cross-multiply equal, so the two sides
agree up to one common rational function of M.
"""

from ajcable.aj import (
    cabled_a_polynomial_factors,
    compare_aj,
    determinant_check,
)
from ajcable.jones import CablingParams

EXEMPLARS = (
    CablingParams(3, 2, 13, 2),    # s = 2
    CablingParams(5, 3, 121, 4),   # even s > 2
    CablingParams(3, 2, 31, 3),    # odd s, q = 2
    CablingParams(5, 3, 76, 5),    # odd s, q > 2
)

for params in EXEMPLARS:
    aj = compare_aj(params)
    det = determinant_check(params)
    print(f"{params}   case={aj['case_tag']}   L-degree={aj['L_degree']}")
    print("  classical factors:")
    for fac in cabled_a_polynomial_factors(params):
        print(f"    {fac.text()}")
    print(f"  projective match: {aj['projective_match']}   common ratio: {aj['ratio']}")
    print(f"  b(-1) nonzero and matches closed form: {det['b_nonzero'] and det['b_matches_closed_form']}")
    if det["determinant_applicable"]:
        print(f"  determinant matches closed form: {det['determinant_matches']}")
    print()
