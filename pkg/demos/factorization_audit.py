"""
Auditing a blow-up/blow-down chain
==================================

Along any chain of blow-ups and blow-downs the numbers h^{p,0}, h^{0,q},
b_1 and b_2 - h^{1,1} stay put, while h^{1,1} moves by one per step.
"""

from hodgeblow import FactorizationScript, FactorizationStep, curve, point, torus
from hodgeblow.birational import script_contract

up, down = FactorizationStep.up, FactorizationStep.down
script = FactorizationScript(
    torus(3),
    (up(point()), up(curve(2)), down(point()), up(point())),
    name="demo",
)
final, trace, delta, report, problems = script_contract(script)

for i, m in enumerate(trace):
    print(i, m.name, "h11 =", m.h(1, 1), "b2 =", m.betti[2])

print("count delta:", delta)
for e in report.entries:
    print(f"{e.invariant:>14}  {e.left:>3} {e.right:>3}  {e.equal}")
print("problems:", problems)
