"""Powers and orbits of a 4x4 matrix with a critical 2-cycle.

The powers settle into period 2 after a short transient. Orbits from most
starting vectors inherit that period, while the attraction region holds the
vectors that the matrix maps to fixed points.
"""

from _common import matrix, show, show_rows

from tropluk import TropVector, attraction_membership, luk_power, orbit_period, power_period

A = matrix("cycle4")
for t in (2, 3, 4):
    print(f"power {t}:")
    show_rows(luk_power(A, t))

rep = power_period(A)
print(f"\npowers: transient {rep.transient}, period {rep.period}, cyclicity {rep.cyclicity}")

for x in (["1", "0", "0", "0"], ["1", "1", "0.59", "0.18"], ["0.3", "0.3", "0.3", "0.3"]):
    x = TropVector(x)
    orbit = orbit_period(A, x)
    inside = attraction_membership(A, x)
    print(f"orbit of {show(x)}: period {orbit.period}, attracted: {inside}")

zero = power_period(matrix("sym2"))
print(f"\nsym2 powers reach the {zero.regime} regime at step {zero.transient}")
