"""Eigenvector regions of two 2x2 matrices, drawn on a 1/20 grid.

Each picture has x1 growing to the right and x2 growing upwards; '#' marks
an eigenvector. The shapes change as the level crosses the cycle means.
"""

from fractions import Fraction

from _common import matrix

from tropluk import TropVector, is_luk_eigenvector

GRID = [Fraction(k, 20) for k in range(21)]

for name, levels in (("sym2", ["0.1", "0.5", "0.8"]), ("asym2", ["0.35", "0.4", "0.55", "0.85"])):
    A = matrix(name)
    for lam in levels:
        print(f"{name} at level {lam}")
        for x2 in reversed(GRID):
            row = "".join(
                "#" if is_luk_eigenvector(A, lam, TropVector([x1, x2])) else "." for x1 in GRID
            )
            print("   ", row)
        print()
