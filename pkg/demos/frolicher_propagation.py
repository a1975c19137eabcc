"""
Frölicher degeneration under blow-up
====================================

The Frölicher defect of a blow-up is the defect of the ambient manifold
plus shifted copies of the defect of the center.  A non-degenerate center
therefore spoils degeneration, even inside a very tame ambient space.
"""

from hodgeblow import BlowUpSpec, blow_up, iwasawa, make_model
from hodgeblow.spectral import check_defect_identity, degenerates_at_E1, frolicher_defect

w = iwasawa()
print(w.name, frolicher_defect(w).d)

# a degenerate fivefold with projective-space numbers and no Kähler flag,
# so it may contain the Iwasawa manifold
h = [[int(p == q) for q in range(6)] for p in range(6)]
x = make_model("X", h, betti=[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1])

spec = BlowUpSpec(x, w)
y = blow_up(spec)
print(y.name, frolicher_defect(y).d)
print("identity holds:", check_defect_identity(spec, y))

rep = degenerates_at_E1(y)
print("degenerate:", rep.degenerate, "first failing k:", rep.first_failing_k)

# defects in degrees 1 and 2 never change
print(frolicher_defect(x).d[1:3], frolicher_defect(y).d[1:3])
