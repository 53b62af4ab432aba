"""Euler's theorem in F_q[t]/(g), checked exhaustively for small g."""

import itertools

from ..classical import ResourceError, factorize
from ..report import FAIL, PASS, Check
from .ffield import fpoly_divmod, fpoly_gcd, fpoly_mod, fpoly_mul, fpoly_powmod, fpoly_trim, make_extension

RING_BUDGET = 3**8


def field_of_order(q):
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, m = f[0]
    return make_extension(p, m)


class PolyQuotient:
    """The finite ring F_q[t]/(g) for a monic g of degree >= 1.

    Elements are coefficient tuples of length deg g, low degree first.
    """

    def __init__(self, q, g, budget=RING_BUDGET):
        self.F = field_of_order(q)
        self.q = q
        g = fpoly_trim(list(g))
        if len(g) < 2:
            raise ValueError("modulus must have degree >= 1")
        if g[-1] != 1:
            raise ValueError("modulus must be monic")
        self.g = g
        self.n = n = len(g) - 1
        if q**n > budget:
            raise ResourceError(f"F_{q}[t]/(g) has {q}^{n} elements, over budget {budget}")
        self.size = q**n
        self._units = None

    def elements(self):
        return itertools.product(range(self.q), repeat=self.n)

    def _poly(self, f):
        return fpoly_trim(list(f))

    def _tuple(self, f):
        return tuple(f) + (0,) * (self.n - len(f))

    def mul(self, a, b):
        return self._tuple(fpoly_mod(self.F, fpoly_mul(self.F, self._poly(a), self._poly(b)), self.g))

    def pow_mod(self, f, e):
        return self._tuple(fpoly_powmod(self.F, self._poly(f), e, self.g))

    @property
    def one(self):
        return self._tuple([1])

    def is_unit(self, f):
        # a unit iff some power returns to 1; found by walking the power orbit
        one = self.one
        x = tuple(f)
        seen = set()
        while x not in seen:
            if x == one:
                return True
            seen.add(x)
            x = self.mul(x, f)
        return False

    def units(self):
        if self._units is None:
            self._units = [f for f in self.elements() if self.is_unit(f)]
        return self._units

    def unit_count(self):
        return len(self.units())

    def coprime(self, f):
        return fpoly_gcd(self.F, self._poly(f), self.g) == [1]

    def coprime_count(self):
        return sum(1 for f in self.elements() if self.coprime(f))


def poly_quotient(q, g, budget=RING_BUDGET):
    return PolyQuotient(q, g, budget)


def monic_polys(q, degree):
    for lower in itertools.product(range(q), repeat=degree):
        yield list(lower) + [1]


def irreducible_factors(F, g):
    """Factor a monic g into monic irreducibles by trial division, as [(factor, exponent)]."""
    g = list(g)
    out = []
    d = 1
    while len(g) > 1:
        if 2 * d > len(g) - 1:
            out.append((g, 1))
            break
        for h in monic_polys(F.q, d):
            k = 0
            while True:
                quot, rem = fpoly_divmod(F, g, h)
                if rem:
                    break
                g = quot
                k += 1
            if k:
                out.append((h, k))
        d += 1
    merged = {}
    for h, k in out:
        merged[tuple(h)] = merged.get(tuple(h), 0) + k
    return [(list(h), k) for h, k in merged.items()]


def phi_divisor(q, g):
    """phi of the divisor of zeros of g on A^1: prod over irreducible factors h^a of q^{d(a-1)}(q^d - 1)."""
    F = field_of_order(q)
    out = 1
    for h, a in irreducible_factors(F, g):
        d = len(h) - 1
        out *= (q**d - 1) * q ** (d * (a - 1))
    return out


def euler_check_wardlaw(q, degree_bound):
    """f^{#units} = 1 in F_q[t]/(g) for every monic g with deg g <= degree_bound and f coprime to g."""
    params = {"q": q, "degree_bound": degree_bound}
    rings = checks = 0
    for n in range(1, degree_bound + 1):
        for g in monic_polys(q, n):
            R = PolyQuotient(q, g)
            rings += 1
            units = R.unit_count()
            coprime = R.coprime_count()
            label = f"g = {_fmt(g)}"
            if units != coprime:
                return Check("WARDLAW", FAIL, params, f"{label}: {units} units but {coprime} coprime residues",
                             {"degree": n, "g": _fmt(g), "lhs": coprime, "rhs": units})
            phi = phi_divisor(q, g)
            if phi != units:
                return Check("WARDLAW", FAIL, params, f"{label}: phi_X(div g) = {phi}, {units} units",
                             {"degree": n, "g": _fmt(g), "lhs": phi, "rhs": units})
            for f in R.elements():
                if not R.coprime(f):
                    continue
                checks += 1
                if R.pow_mod(f, units) != R.one:
                    return Check("WARDLAW", FAIL, params, f"{label}: f = {_fmt(f)} has f^{units} != 1",
                                 {"degree": n, "g": _fmt(g), "f": _fmt(f)})
    return Check("WARDLAW", PASS, params, f"{rings} moduli, {checks} coprime residues, 0 failures")


def _fmt(f):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
        terms.append(mono if c == 1 and i else (str(c) if i == 0 else f"{c}*{mono}"))
    return " + ".join(terms) or "0"
