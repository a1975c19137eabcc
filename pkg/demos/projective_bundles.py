"""
Projective bundles and the exceptional divisor
==============================================

The exceptional divisor of a blow-up along Z is a projective bundle over Z,
and the blow-up diamond is X + E - Z.
"""

from hodgeblow import BlowUpSpec, blow_up, curve, exceptional_divisor, projective_bundle, projective_space
from hodgeblow.render import render_diamond

# ruled surfaces over curves
for g in range(4):
    print(g, projective_bundle(curve(g), 2).to_lists())

spec = BlowUpSpec(projective_space(3), curve(2))
e = exceptional_divisor(spec)
print(e.name)
print("\n".join(render_diamond(e.diamond)))

y = blow_up(spec)
x, z = spec.ambient.diamond, spec.center.diamond
check = all(
    y.diamond[p, q] == x[p, q] + e.diamond[p, q] - z[p, q]
    for p in range(4)
    for q in range(4)
)
print("X + E - Z matches:", check)
print("betti:", y.betti.b)
