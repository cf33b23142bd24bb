"""Exact degree predictions vs computed extreme t-exponents.

The lowest/highest exponents of the values grow quadratically in the
color with a parity bump; the closed forms below are checked against the
exact polynomials side by side.
"""

from ajcable.degrees import audit_degrees
from ajcable.jones import CablingParams


def show(label, rows):
    print(label)
    for row in rows:
        print(
            f"  n={row['n']:<3} {row['side']:<8} predicted={row['predicted']:<7} "
            f"actual={row['actual']:<7} {'ok' if row['match'] else 'MISMATCH'}"
        )
    print()


show("Trefoil (3,2), colors 2..6:", audit_degrees((3, 2), 2, 6))
show("Mirror (-5,3), colors 2..5:", audit_degrees((-5, 3), 2, 5))
show(
    "(13,2)-cable of the trefoil (lowest side only: r > pqs):",
    audit_degrees(CablingParams(3, 2, 13, 2), 2, 5),
)
show(
    "(-1,2)-cable of the trefoil (both sides: r < 0):",
    audit_degrees(CablingParams(3, 2, -1, 2), 2, 5),
)
