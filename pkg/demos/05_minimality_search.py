"""Searching for lower-order annihilators inside bounded coefficient boxes.

The search spans polynomial-coefficient operators whose monomials sit in
boxes centered on the degree-growth law of the sequence.  Modular rank
checks give a sound "none within bounds"; any candidate that survives is
verified exactly before "found" is reported.

The unknot is the instructive control: its second-order annihilator
L^2 - (t^2 + t^-2) L + 1 is recovered, while the first-order search over
the same (M-free) box correctly reports none.
"""

from ajcable.jones import CablingParams
from ajcable.minimality import default_search_bounds, search_bounded_annihilator


def show(label, report):
    print(label)
    print(
        f"  L-degree {report['L_degree_searched']}, {report['unknowns']} unknowns, "
        f"{report['equations']} equations"
    )
    print(f"  verdict: {report['verdict']}")
    if "found" in report:
        print(f"  found: {report['found']}")
    print()


show("Unknot, order 2 (positive control):", search_bounded_annihilator(None))
show(
    "Unknot, order 1 (negative control):",
    search_bounded_annihilator(None, default_search_bounds(None, l_degree=1)),
)

params = CablingParams(3, 2, 13, 2)
show(
    f"{params}, one below the constructed order:",
    search_bounded_annihilator(params),
)

params = CablingParams(5, 3, 76, 5)
show(
    f"{params}, one below the constructed order:",
    search_bounded_annihilator(params),
)
