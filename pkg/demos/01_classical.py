"""
Arithmetic functions on N
=========================

The positive integers under multiplication are free on the primes.  The
totient, the divisor sums and Dedekind's psi all come out of convolution
with zeta and mu in that monoid.
"""

from arithgeom import classical as C
from arithgeom.monoid import convolve

# phi by its product formula, and by counting residues prime to n
for n in (1, 12, 36, 97):
    print(n, C.phi(n), C.phi_by_count(n))

# the same numbers inside the incidence algebra of N^x:
# phi = id * mu, so phi * zeta = id
N = C.natural_monoid()
ident = N.weight_function
phi = convolve(ident, N.mu, "phi")
print([phi(C.element_of(n, N)) for n in range(1, 13)])
print([convolve(phi, N.zeta)(C.element_of(n, N)) for n in range(1, 13)])

# Liouville's lambda is the inverse of |mu|; it detects squares
print([sum(C.liouville(d) for d in C.divisors_of(n)) for n in range(1, 17)])

# psi(n) is the index of Gamma_0(n), computed here in SL_2(Z/n)
print([(n, C.sl2_index(n), C.psi(n)) for n in range(1, 9)])

# #P^1(Z/n) by enumeration, next to sigma_1 and psi:
# they agree with sigma_1 only when n is squarefree
for n in (4, 6, 8, 9, 12):
    print(n, C.p1_count(n), C.sigma1(n), C.psi(n))

# the identity suite, with the first counterexample of each failure
for name in C.CLASSICAL_IDENTITIES:
    c = C.verify_classical_identity(name, 200)
    print(f"{name:24s} {c.status:5s} {c.detail}")
