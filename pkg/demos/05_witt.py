"""
Witt vectors and psi
====================

W_k(F_{p^2})^x / W_k(F_p)^x has psi(p^k) elements.  Here the group is
built by listing cosets rather than by the counting formula.
"""

from arithgeom import witt
from arithgeom.classical import psi

# ghost components turn Witt addition into coordinatewise addition
u, v = [1, 2, 0], [3, 1, 1]
print(witt.ghost(witt.witt_sum_int(u, v, 2), 2))
print([a + b for a, b in zip(witt.ghost(u, 2), witt.ghost(v, 2))])

# W_2(F_2) is Z/4: 1 + 1 = (0, 1), and (1, 1) = 3 squares to 1
R = witt.witt_ring(2, 2)
print(R.one() + R.one(), R.vector((1, 1)) * R.vector((1, 1)))

for p, k in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)):
    r = witt.psi_group(p, k)
    print(p, k, r.big_order, r.small_order, r.coset_count, psi(p**k), r.cyclic_observed)

print([(n, witt.G_n_order(n), psi(n)) for n in (12, 18, 45)])
