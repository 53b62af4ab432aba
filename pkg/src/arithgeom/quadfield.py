"""Ideals of a quadratic field K = Q(sqrt d) as a free graded monoid.

The formula layer works on abstract monoid elements over prime-ideal atoms.
The oracle layer builds each ideal as an explicit lattice inside
Z + Z*omega (Hermite normal form) and enumerates the finite ring O_K/a.
"""

import math
import random
from dataclasses import dataclass

from .classical import ResourceError, is_prime, primes_upto
from .monoid import (Atom, FreeMonoid, MonoidElement, MULTIPLICATIVE, ArithmeticFunction,
                     convolve, pushforward_series)
from .report import Check, FAIL, PASS, compare_series, merge

ORACLE_CAP = 400
SL2_NORM_CAP = 16

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"


def _squarefree(n):
    n = abs(n)
    return all(n % (k * k) for k in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class PrimeIdealAtom:
    p: int
    kind: str
    index: int
    f: int

    @property
    def norm(self):
        return self.p**self.f

    @property
    def id(self):
        return (self.p, self.index)

    @property
    def atom(self):
        return Atom(self.id, self.norm)


class QuadraticField:
    """K = Q(sqrt d) with integral basis {1, omega}.

    omega = (1 + sqrt d)/2 when d = 1 mod 4, otherwise sqrt d.  Elements of
    O_K are pairs (x, y) meaning x + y*omega.
    """

    def __init__(self, d):
        if not isinstance(d, int) or d in (0, 1) or not _squarefree(d):
            raise ValueError(f"d must be a squarefree integer other than 0 and 1, got {d!r}")
        self.d = d
        if d % 4 == 1:
            self.disc = d
            # omega^2 = trace*omega + const
            self.trace, self.const = 1, (d - 1) // 4
        else:
            self.disc = 4 * d
            self.trace, self.const = 0, d
        self._atoms = {}
        self.monoid = FreeMonoid(mode=MULTIPLICATIVE, name=f"I(Q(sqrt {d}))", atom_source=self._atom_source)
        self.norm_fn = self.monoid.weight_function
        self.phi = ArithmeticFunction(lambda a: phi_K(self, a), "phi_K", "product")
        self.sigma1 = ArithmeticFunction(lambda a: sigma1_K(self, a), "sigma1_K", "product")
        self.psi = ArithmeticFunction(lambda a: psi_K(self, a), "psi_K", "product")
        self.liouville = ArithmeticFunction(lambda a: lambda_K(self, a), "lambda_K", "product")
        self._lattices = {}

    def __repr__(self):
        return f"QuadraticField({self.d})"

    def mul(self, u, v):
        a, b = u
        c, e = v
        be = b * e
        return (a * c + be * self.const, a * e + b * c + be * self.trace)

    def min_poly_mod(self, x, p):
        return (x * x - self.trace * x - self.const) % p

    # -- splitting ---------------------------------------------------------

    def split_prime(self, p):
        """Prime ideals above p, by the Kronecker symbol (D|p)."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p in self._atoms:
            return self._atoms[p]
        D = self.disc
        if D % p == 0:
            kind = RAMIFIED
        elif p == 2:
            kind = SPLIT if self.d % 8 == 1 else INERT
        else:
            kind = SPLIT if pow(D % p, (p - 1) // 2, p) == 1 else INERT
        if kind == SPLIT:
            atoms = [PrimeIdealAtom(p, SPLIT, 0, 1), PrimeIdealAtom(p, SPLIT, 1, 1)]
        elif kind == INERT:
            atoms = [PrimeIdealAtom(p, INERT, 0, 2)]
        else:
            atoms = [PrimeIdealAtom(p, RAMIFIED, 0, 1)]
        self._atoms[p] = atoms
        return atoms

    def prime_atom(self, atom_id):
        p, i = atom_id
        return self.split_prime(p)[i]

    def _atom_source(self, bound):
        for p in primes_upto(bound):
            for a in self.split_prime(p):
                if a.norm <= bound:
                    yield a.atom

    def ideal(self, *factors):
        """Monoid element from (p, index, exponent) triples or PrimeIdealAtoms."""
        d = {}
        for fac in factors:
            if isinstance(fac, PrimeIdealAtom):
                atom, k = fac, 1
            else:
                p, i, k = fac
                atom = self.split_prime(p)[i]
            self.monoid.register(atom.atom)
            d[atom.id] = d.get(atom.id, 0) + k
        return MonoidElement(d)

    def norm(self, a):
        return self.monoid.weight(a)

    # -- lattices ------------------------------------------------------------

    def prime_lattice(self, atom):
        """HNF lattice of a prime ideal: (p) if inert, else (p, omega - r) for a root r."""
        p = atom.p
        roots = [r for r in range(p) if self.min_poly_mod(r, p) == 0]
        if atom.kind == INERT:
            if roots:
                raise ArithmeticError(f"min poly has roots mod {p} but {p} was classified inert")
            return IdealLattice.from_generators([(p, 0), (0, p)])
        expected = 2 if atom.kind == SPLIT else 1
        if len(roots) != expected:
            raise ArithmeticError(f"{len(roots)} roots mod {p} but {p} was classified {atom.kind}")
        r = roots[atom.index]
        g = (-r, 1)
        lat = IdealLattice.from_generators([(p, 0), (0, p), g, self.mul((0, 1), g)])
        if lat.index != atom.norm:
            raise ArithmeticError(f"lattice index {lat.index} != norm {atom.norm}")
        return lat

    def lattice(self, a):
        """The ideal a as an explicit HNF lattice, multiplied out from its prime factors."""
        if a in self._lattices:
            return self._lattices[a]
        lat = IdealLattice.unit()
        for atom_id, k in a.items():
            pl = self.prime_lattice(self.prime_atom(atom_id))
            for _ in range(k):
                lat = lat.multiply(pl, self)
        self._lattices[a] = lat
        return lat


def _hnf(gens):
    """HNF (a, b, c) of the Z-span of 2-vectors: basis (a, 0), (b, c), 0 <= b < a."""
    rows = [[y, x] for x, y in gens if x or y]
    # eliminate the omega-coordinate by the Euclidean algorithm
    while sum(1 for r in rows if r[0]) > 1:
        rows.sort(key=lambda r: (r[0] == 0, abs(r[0])))
        piv = rows[0]
        for r in rows[1:]:
            if r[0]:
                q = r[0] // piv[0]
                r[0] -= q * piv[0]
                r[1] -= q * piv[1]
    pivots = [r for r in rows if r[0]]
    if not pivots:
        raise ValueError("generators do not span a full-rank lattice")
    c, b0 = pivots[0]
    if c < 0:
        c, b0 = -c, -b0
    a = 0
    for r in rows:
        if not r[0]:
            a = math.gcd(a, r[1])
    if a == 0:
        raise ValueError("generators do not span a full-rank lattice")
    return a, b0 % a, c


class IdealLattice:
    """Sublattice of Z^2 with basis (a, 0), (b, c); index a*c."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c

    @classmethod
    def from_generators(cls, gens):
        return cls(*_hnf(gens))

    @classmethod
    def unit(cls):
        return cls(1, 0, 1)

    @property
    def index(self):
        return self.a * self.c

    @property
    def basis(self):
        return [(self.a, 0), (self.b, self.c)]

    def multiply(self, other, K):
        gens = [K.mul(u, v) for u in self.basis for v in other.basis]
        return IdealLattice.from_generators(gens)

    def reduce(self, v):
        x, y = v
        k = y // self.c
        x -= k * self.b
        y -= k * self.c
        return (x % self.a, y)

    def contains(self, v):
        return self.reduce(v) == (0, 0)

    def __eq__(self, other):
        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __repr__(self):
        return f"IdealLattice([[{self.a}, 0], [{self.b}, {self.c}]])"


class QuotientRing:
    """O_K/a with elements indexed 0..N-1 and full addition/multiplication tables."""

    def __init__(self, K, a, cap=ORACLE_CAP):
        n = K.norm(a)
        if n > cap:
            raise ResourceError(f"quotient ring of order {n} exceeds cap {cap}")
        self.K = K
        self.ideal = a
        self.lattice = lat = K.lattice(a)
        if lat.index != n:
            raise ArithmeticError(f"HNF index {lat.index} != product-formula norm {n}")
        self.order = n
        self.elements = [(x, y) for y in range(lat.c) for x in range(lat.a)]
        index = {v: i for i, v in enumerate(self.elements)}
        self._index = index
        els = self.elements
        self.add = [[index[lat.reduce((u[0] + v[0], u[1] + v[1]))] for v in els] for u in els]
        self.mul = [[index[lat.reduce(K.mul(u, v))] for v in els] for u in els]
        self.neg = [index[lat.reduce((-u[0], -u[1]))] for u in els]
        self.zero = index[lat.reduce((0, 0))]
        self.one = index[lat.reduce((1, 0))]

    def element(self, v):
        return self._index[self.lattice.reduce(v)]

    def sub(self, i, j):
        return self.add[i][self.neg[j]]

    def is_unit(self, i):
        return self.one in self.mul[i]

    def units(self):
        return [i for i in range(self.order) if self.is_unit(i)]

    def unit_count(self):
        return len(self.units())

    def p1_count(self):
        """Unimodular pairs (x, y), i.e. xR + yR = R, modulo scaling by units."""
        if self.order == 1:
            return 1
        principal = {}
        for i in range(self.order):
            principal.setdefault(frozenset(self.mul[i]), []).append(i)
        ideals = list(principal)
        pairs = 0
        for I in ideals:
            for J in ideals:
                if any(self.sub(self.one, s) in J for s in I):
                    pairs += len(principal[I]) * len(principal[J])
        units = self.unit_count()
        if pairs % units:
            raise ArithmeticError(f"{pairs} unimodular pairs not divisible by {units} units")
        return pairs // units

    def pow(self, i, e):
        result = self.one
        while e:
            if e & 1:
                result = self.mul[result][i]
            i = self.mul[i][i]
            e >>= 1
        return result

    pow_mod = pow

    def check_axioms(self, samples=200, seed=0):
        rng = random.Random(seed)
        n = self.order
        add, mul = self.add, self.mul
        for _ in range(samples):
            x, y, z = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if add[x][y] != add[y][x] or mul[x][y] != mul[y][x]:
                return False
            if add[add[x][y]][z] != add[x][add[y][z]] or mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                return False
            if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                return False
            if mul[x][self.one] != x or add[x][self.zero] != x or add[x][self.neg[x]] != self.zero:
                return False
        return True

    def sl2_index(self):
        """[SL_2(R) : upper triangular], enumerating all N^4 matrices."""
        n = self.order
        mul, one = self.mul, self.one
        total = borel = 0
        rng = range(n)
        for a in rng:
            ma = mul[a]
            for d in rng:
                ad = ma[d]
                for b in rng:
                    mb = mul[b]
                    for c in rng:
                        if self.sub(ad, mb[c]) == one:
                            total += 1
                            if c == self.zero:
                                borel += 1
        if total % borel:
            raise ArithmeticError("subgroup order does not divide group order")
        return total // borel


# -- product formulas ---------------------------------------------------------

def _prime_norms(K, a):
    return [(K.monoid.atom(i).weight, k) for i, k in a.items()]


def norm(K, a):
    return K.norm(a)


def phi_K(K, a):
    r = 1
    for q, k in _prime_norms(K, a):
        r *= q ** (k - 1) * (q - 1)
    return r


def sigma1_K(K, a):
    r = 1
    for q, k in _prime_norms(K, a):
        r *= (q ** (k + 1) - 1) // (q - 1)
    return r


def psi_K(K, a):
    r = 1
    for q, k in _prime_norms(K, a):
        r *= q ** (k - 1) * (q + 1)
    return r


def lambda_K(K, a):
    return -1 if a.omega() % 2 else 1


def enumerate_ideals(K, norm_bound):
    """All ideals of norm <= bound as (ideal, norm), ordered by (norm, factorization)."""
    return [(a, K.norm(a)) for a in K.monoid.elements_upto(norm_bound)]


def quotient_ring(K, a, cap=ORACLE_CAP):
    return QuotientRing(K, a, cap)


def dirichlet_pushforward(K, fn, bound):
    """Dirichlet coefficients of N_* fn."""
    if isinstance(fn, str):
        fn = function(K, fn)
    return pushforward_series(fn, K.monoid, bound)


def function(K, name):
    table = {"zeta": K.monoid.zeta, "delta": K.monoid.delta, "mu": K.monoid.mu, "abs_mu": K.monoid.abs_mu,
             "norm": K.norm_fn, "phi": K.phi, "sigma1": K.sigma1, "psi": K.psi, "lambda": K.liouville}
    try:
        return table[name]
    except KeyError:
        raise KeyError(f"unknown ideal function {name!r}") from None


def sl2_index_K(K, a, cap=SL2_NORM_CAP):
    if K.norm(a) > cap:
        raise ResourceError(f"SL_2 enumeration is N^4; norm {K.norm(a)} exceeds cap {cap}")
    return QuotientRing(K, a).sl2_index()


# -- verification ------------------------------------------------------------

def _elementwise(name, lhs, rhs, ideals, params):
    for a, n in ideals:
        x, y = lhs(a), rhs(a)
        if x != y:
            return Check(name, FAIL, params, f"mismatch at ideal {a!r} (norm {n}): {x} != {y}",
                         {"norm": n, "ideal": repr(a), "lhs": x, "rhs": y})
    return Check(name, PASS, params, f"{len(ideals)} ideals agree")


def verify_quadfield_identity(name, K, bound):
    params = {"d": K.d, "bound": bound}
    M = K.monoid
    N = K.norm_fn
    ideals = enumerate_ideals(K, bound)

    def series(f):
        return pushforward_series(f, M, bound)

    if name == "PHIK_RECURSION":
        return _elementwise(name, convolve(K.phi, M.zeta), N, ideals, params)
    if name == "PHIK_ZETA_QUOTIENT":
        zK = series(M.zeta)
        return merge(name, [
            _elementwise("phi_K*zeta = N", convolve(K.phi, M.zeta), N, ideals, {}),
            _elementwise("phi_K = N*mu_K", K.phi, convolve(N, M.mu), ideals, {}),
            compare_series("zeta_K(s-1)/zeta_K(s)", series(K.phi), zK.shift(1) / zK),
        ], params)
    if name == "SIGMAK_SERIES":
        zK = series(M.zeta)
        return merge(name, [
            _elementwise("sigma1_K = N*zeta", K.sigma1, convolve(N, M.zeta), ideals, {}),
            compare_series("zeta_K(s)zeta_K(s-1)", series(K.sigma1), zK * zK.shift(1)),
        ], params)
    if name == "PSIK_ABSMU":
        return _elementwise(name, K.psi, convolve(N, M.abs_mu), ideals, params)
    if name == "PSIK_SERIES":
        zK = series(M.zeta)
        return merge(name, [
            _elementwise("psi_K = N*|mu_K|", K.psi, convolve(N, M.abs_mu), ideals, {}),
            _elementwise("|mu_K|*lambda_K = delta", convolve(M.abs_mu, K.liouville), M.delta, ideals, {}),
            compare_series("|mu_K| zeta_K(2s) = zeta_K(s)", series(M.abs_mu) * zK.dilate(2), zK),
            compare_series("psi_K zeta_K(2s) = zeta_K(s)zeta_K(s-1)", series(K.psi) * zK.dilate(2),
                           zK * zK.shift(1)),
        ], params)
    if name == "PSIK_SQUAREFREE":
        sqf = [(a, n) for a, n in ideals if a.is_squarefree()]
        return _elementwise(name, K.psi, K.sigma1, sqf, params)
    if name == "LAMBDAK_DELTA":
        zK = series(M.zeta)
        return merge(name, [
            _elementwise("lambda_K*|mu_K| = delta", convolve(K.liouville, M.abs_mu), M.delta, ideals, {}),
            compare_series("lambda_K zeta_K(s) = zeta_K(2s)", series(K.liouville) * zK, zK.dilate(2)),
        ], params)
    if name == "MUK_ZETA_DELTA":
        return _elementwise(name, convolve(M.mu, M.zeta), M.delta, ideals, params)
    if name == "PHIK_ORACLE":
        return _elementwise(name, K.phi, lambda a: QuotientRing(K, a).unit_count(), ideals, params)
    if name == "SIGMAK_ORACLE":
        return _elementwise(name, K.sigma1, lambda a: QuotientRing(K, a).p1_count(), ideals, params)
    if name == "PSIK_P1_ORACLE":
        return _elementwise(name, K.psi, lambda a: QuotientRing(K, a).p1_count(), ideals, params)
    if name == "PSIK_SL2":
        small = [(a, n) for a, n in ideals if n <= SL2_NORM_CAP]
        return _elementwise(name, lambda a: sl2_index_K(K, a), K.psi, small,
                            {"d": K.d, "bound": min(bound, SL2_NORM_CAP)})
    raise KeyError(f"unknown quadratic-field identity {name!r}")


QUADFIELD_IDENTITIES = ["MUK_ZETA_DELTA", "PHIK_RECURSION", "PHIK_ZETA_QUOTIENT", "SIGMAK_SERIES",
                        "PSIK_ABSMU", "PSIK_SERIES", "PSIK_SQUAREFREE", "LAMBDAK_DELTA"]
QUADFIELD_ORACLES = ["PHIK_ORACLE", "SIGMAK_ORACLE", "PSIK_P1_ORACLE", "PSIK_SL2"]


def euler_check_K(K, norm_bound):
    """alpha^phi_K(b) = 1 in O_K/b for every b of norm <= bound and every unit alpha."""
    params = {"d": K.d, "bound": norm_bound}
    tested = 0
    for b, n in enumerate_ideals(K, norm_bound):
        R = QuotientRing(K, b)
        e = phi_K(K, b)
        for u in R.units():
            tested += 1
            if R.pow(u, e) != R.one:
                return Check("EULER_K", FAIL, params, f"unit {R.elements[u]} ^ {e} != 1 mod {b!r}",
                             {"norm": n, "ideal": repr(b), "unit": R.elements[u]})
    return Check("EULER_K", PASS, params, f"{tested} (unit, ideal) pairs, 0 failures")


def check_splitting(K, p):
    """Ideal counts at p and p^2 agree with the splitting type."""
    kind = K.split_prime(p)[0].kind
    counts = {}
    for a, n in enumerate_ideals(K, p * p):
        counts[n] = counts.get(n, 0) + 1
    ap, ap2 = counts.get(p, 0), counts.get(p * p, 0)
    return {SPLIT: ap == 2, INERT: ap == 0 and ap2 >= 1, RAMIFIED: ap == 1}[kind]
