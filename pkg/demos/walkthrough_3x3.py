"""A 3x3 matrix at level 0.6.

Lists the secure partitions, then the generators of each piece of the
eigenspace, and checks every generator against the defining equation.
"""

from _common import matrix, show

from tropluk import enumerate_secure_partitions, full_eigenspace, is_luk_eigenvector

A = matrix("walk3")
lam = "0.6"

print("secure partitions at level", lam)
for part in enumerate_secure_partitions(A, lam):
    print("   ", part)

report = full_eigenspace(A, lam)
for entry in report.entries:
    print(f"\n{entry.partition}  [{entry.kind}]")
    if entry.kind == "background":
        print("    every x <=", show(entry.box))
        continue
    for v in entry.vectors():
        assert is_luk_eigenvector(A, lam, v)
        print("    generator", show(v))

print("\ngreatest eigenvector:", show(report.greatest))
