"""
The dodecahedron as a double cover of the Petersen graph
========================================================

Build the labelled projection, check it, and compare the three domination
numbers on both sides.
"""

from coverdom import check_sandwich, fiber, fixture, verify_projection
from coverdom.graph import DODECAHEDRON_LABELS, PETERSEN_LABELS

F, G, p = fixture("petersen-dodecahedron")
print(verify_projection(p), "fold", p.k)

# each Petersen vertex has two preimages, e.g. 1 -> {1, 1'}
for v in range(F.n):
    print(PETERSEN_LABELS[v], "<-", [DODECAHEDRON_LABELS[x] for x in fiber(p, v)])

for report in check_sandwich(F, G, p):
    lows = ", ".join(f"{b.name}={b.render()}" for b in report.lowers)
    ups = ", ".join(f"{b.name}={b.render()}" for b in report.uppers)
    print(f"{report.kind:9s} F={report.exact_F:2d} G={report.exact_G:2d}  lower: {lows}  upper: {ups}")
