"""
Blowing up points in projective space
=====================================

Blowing up a point adds one class in every interior diagonal degree.
"""

from hodgeblow import BlowUpSpec, blow_up, point, projective_space
from hodgeblow.render import render_diamond

x = projective_space(3)
y = blow_up(BlowUpSpec(x, point()))
print("\n".join(render_diamond(x.diamond)))
print()
print("\n".join(render_diamond(y.diamond)))

# the corners never move: h^{0,0} = h^{n,n} = 1 on a connected manifold
for n in range(2, 9):
    d = blow_up(BlowUpSpec(projective_space(n), point())).diamond
    print(n, [d[p, p] for p in range(n + 1)])

# two points at once, as a disconnected center
print(blow_up(BlowUpSpec(projective_space(2), [point(), point()])).h(1, 1))
