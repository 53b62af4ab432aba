"""
Ideals of a quadratic field
===========================

The nonzero ideals of O_K are free on the prime ideals and graded by norm.
Each ideal is an HNF lattice, so O_K/a can be built and its units counted
directly.
"""

from arithgeom import quadfield as Q

K = Q.QuadraticField(-1)

# how small primes split in Z[i]
for p in (2, 3, 5, 7, 13):
    print(p, [(a.kind, a.norm) for a in K.split_prime(p)])

# ideals of norm <= 10, with phi_K and an exhaustive unit count
for a, n in Q.enumerate_ideals(K, 10):
    R = Q.quotient_ring(K, a)
    print(n, a, Q.phi_K(K, a), R.unit_count())

# the Dedekind zeta coefficients: number of ideals of each norm
print(list(Q.dirichlet_pushforward(K, "zeta", 25)))

# the Dirichlet identities over Q(sqrt 5)
K5 = Q.QuadraticField(5)
for name in Q.QUADFIELD_IDENTITIES:
    print(name, Q.verify_quadfield_identity(name, K5, 200).status)

# #P^1(O_K/a) against sigma_1,K and psi_K
for name in ("SIGMAK_ORACLE", "PSIK_P1_ORACLE"):
    c = Q.verify_quadfield_identity(name, K, 60)
    print(name, c.status, c.detail)
