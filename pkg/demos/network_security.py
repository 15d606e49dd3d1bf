"""Security of node sets in a five-node network at level 0.4.

A node set L is secure when eigenvectors may sit below 1 - 0.4 exactly on L.
An insecure choice is certified by a walk of positive weight in the shifted
matrix, starting in L and staying outside it afterwards.
"""

from _common import matrix

from tropluk import Partition, enumerate_secure_partitions, format_scalar, is_secure_partition, shift
from tropluk.spectral import walk_weight

A = matrix("network5")
lam = "0.4"

for L in ([0, 4], [3, 4]):
    part = Partition.from_L(5, L)
    verdict = is_secure_partition(A, lam, part)
    print(part, "secure" if verdict.secure else "insecure")
    if not verdict.secure:
        walk = "->".join(str(k + 1) for k in verdict.witness)
        weight = walk_weight(shift(A, lam), verdict.witness)
        print(f"    witness {walk}, weight {format_scalar(weight)}")

secure = enumerate_secure_partitions(A, lam)
print(f"\n{len(secure)} of 32 node sets are secure; the smallest ones:")
for part in sorted(secure, key=lambda p: len(p.L))[:5]:
    print("   ", part)
