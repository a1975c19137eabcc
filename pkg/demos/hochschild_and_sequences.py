"""
Hochschild dimensions and exact sequences
=========================================

Summing the diamond along the other diagonals gives Hochschild homology
dimensions, which gain r-1 copies of the center's.  The pullback on
Dolbeault cohomology is injective with the same cokernel as Z -> E.
"""

from hodgeblow import BlowUpSpec, curve, hochschild_blow_up, torus
from hodgeblow.exactseq import cokernel_windows, splice_blow_up_rows

spec = BlowUpSpec(torus(3), curve(2))
left, right = hochschild_blow_up(spec)
for k in sorted(left):
    print(k, left[k], right[k])

for (p, q), cok, lower, upper in cokernel_windows(spec):
    if cok:
        print((p, q), "cokernel", cok, lower, upper)

# one long exact sequence per p; relative terms shared by both pairs
for row in splice_blow_up_rows(spec):
    print(row.p, row.relative, "solved at q =", row.solved_index)
