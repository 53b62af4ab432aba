"""
Zeta functions of varieties over finite fields
==============================================

Count points over F_{q^m}, turn the counts into numbers of closed points,
and expand the generating functions of phi, sigma_1, psi and lambda over
effective 0-cycles.
"""

from arithgeom.varzeta import (
    VARIETY_IDENTITIES, count_sequence, cycle_series, parse_variety_spec, spectrum, verify_variety_identity,
)

# the curve y^2 z = x^3 - x z^2 over F_3, read from a spec file
V = parse_variety_spec("""
p=3
ambient=projective
dim=2
poly=y^2*z - x^3 + x*z^2
name=cubic
""")

counts = count_sequence(V, 6)
s = spectrum(counts, 3)
print("N_m", counts)
print("b_d", s.b)

# Z(X, t) and its relatives
for fn in ("zeta", "phi", "sigma1", "psi", "lambda"):
    print(f"{fn:7s}", list(cycle_series(fn, s, 6)))

# each identity is checked coefficient by coefficient
for name in VARIETY_IDENTITIES:
    c = verify_variety_identity(name, V, 6)
    print(f"{name:18s} {c.status}")

# Euler's theorem in F_2[t]/(t^3 + t + 1)
from arithgeom.varzeta import poly_quotient

R = poly_quotient(2, [1, 1, 0, 1])
print(R.unit_count(), all(R.pow_mod(f, R.unit_count()) == R.one for f in R.units()))
