"""
Arithmetic schemes over Z
=========================

A template such as P^1 gives a fibre over every prime.  Multiplying the
local series together gives Dirichlet series; for a point, these are the
classical ones.
"""

from arithgeom import classical as C
from arithgeom import globalzeta as G

point = G.GlobalModel(G.template("point"), 30)
print(G.global_dirichlet(point, "phi").coeffs)
print([C.phi(n) for n in range(1, 31)])

# the zeta function of P^1 over Z has coefficients sigma_1(n)
P1 = G.GlobalModel(G.template("P1"), 30)
print(G.global_dirichlet(P1, "zeta").coeffs)

for name in G.GLOBAL_IDENTITIES:
    c = G.verify_global_identity(name, P1)
    print(f"{name:26s} {c.status} {c.detail}")

# the local factor (1 - (N - 1) N^-s)^-1 taken at face value
c = G.verify_global_identity("EULER_FACTOR_DISCREPANCY", point)
print(c.witness)
