"""Finite fields F_{p^m} and polynomial arithmetic over them.

Elements of F_{p^m} are ints 0..p^m-1 whose base-p digits are the
coefficients (low degree first) of a residue modulo the defining
polynomial.  Multiplication goes through discrete log tables, addition
through Zech logarithms, so both are table lookups.
"""

from functools import lru_cache

from ..classical import ResourceError, factorize, is_prime

MAX_DEGREE = 8


# -- polynomials over F_p as coefficient lists (low degree first) -----------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _psub(a, b, p):
    return _padd(a, [(-c) % p for c in b], p)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = (a[i + k] - c * y) % p
        _trim(a)
    return _trim(q), a


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(a, e, f, p):
    result = [1]
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p):
    """Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1 for primes l | m."""
    m = len(f) - 1
    if m < 1:
        return False
    x = _pmod([0, 1], f, p)
    if _psub(_ppowmod(x, p**m, f, p), x, p) != []:
        return False
    for l, _ in factorize(m) if m > 1 else []:
        h = _psub(_ppowmod(x, p ** (m // l), f, p), x, p)
        if _pgcd(h, f, p) != [1]:
            return False
    return True


def smallest_irreducible(p, m):
    """Monic irreducible x^m + c_{m-1}x^{m-1} + ... + c_0 with the smallest code sum c_i p^i."""
    for code in range(p**m):
        lower = [(code // p**i) % p for i in range(m)]
        f = lower + [1]
        if is_irreducible(f, p):
            return f
    raise ArithmeticError(f"no irreducible polynomial of degree {m} over F_{p}")


def _digits(x, p, m):
    return [(x // p**i) % p for i in range(m)]


def _encode(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


class ExtensionField:
    """F_q with q = p^m, built from the lexicographically smallest monic irreducible."""

    def __init__(self, p, m):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 1 <= m <= MAX_DEGREE:
            raise ResourceError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        self.p, self.m = p, m
        self.q = q = p**m
        self.modulus = smallest_irreducible(p, m)
        mod = self.modulus

        def mulmod(a, b):
            return _encode(_pmod(_pmul(_digits(a, p, m), _digits(b, p, m), p), mod, p), p)

        order = q - 1
        exp = None
        for g in range(1, q):
            table = [1]
            x = 1
            for _ in range(order - 1):
                x = mulmod(x, g)
                if x == 1:
                    break
                table.append(x)
            if len(table) == order:
                exp = table
                self.generator = g
                break
        if exp is None:
            raise ArithmeticError("multiplicative group is not cyclic; modulus is not irreducible")
        self.exp = exp + exp
        self.log = [None] * q
        for i, x in enumerate(exp):
            self.log[x] = i
        # zech[i] = log(1 + g^i), or -1 when 1 + g^i = 0
        zech = []
        for i in range(order):
            x = exp[i]
            one_plus = x - (x % p) + ((x % p) + 1) % p
            zech.append(-1 if one_plus == 0 else self.log[one_plus])
        self.zech = zech
        self.order = order
        self.minus_one = 1 if p == 2 else exp[order // 2]

    def __repr__(self):
        return f"ExtensionField({self.p}, {self.m})"

    def __len__(self):
        return self.q

    def elements(self):
        return range(self.q)

    def from_int(self, c):
        return c % self.p

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        if x == 0:
            return y
        if y == 0:
            return x
        log = self.log
        lx = log[x]
        z = self.zech[(log[y] - lx) % self.order]
        if z < 0:
            return 0
        return self.exp[lx + z]

    def neg(self, x):
        if x == 0 or self.p == 2:
            return x
        return self.exp[self.log[x] + self.order // 2]

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self.exp[self.log[x] + self.log[y]]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[x]) % self.order]

    def pow(self, x, e):
        if x == 0:
            return 1 if e == 0 else 0
        return self.exp[(self.log[x] * e) % self.order]

    def frobenius(self, x, k=1):
        """x -> x^(p^k)."""
        return self.pow(x, self.p**k)

    def digits(self, x):
        return _digits(x, self.p, self.m)


@lru_cache(maxsize=None)
def make_extension(p, m):
    return ExtensionField(p, m)


# -- univariate polynomials over an ExtensionField ---------------------------
# coefficient lists, low degree first, trimmed

def fpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fpoly_add(F, a, b):
    n = max(len(a), len(b))
    return fpoly_trim([F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


def fpoly_sub(F, a, b):
    return fpoly_add(F, a, [F.neg(c) for c in b])


def fpoly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return fpoly_trim(out)


def fpoly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = F.inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv)
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = F.sub(a[i + k], F.mul(c, y))
        fpoly_trim(a)
    return fpoly_trim(q), a


def fpoly_mod(F, a, b):
    return fpoly_divmod(F, a, b)[1]


def fpoly_monic(F, a):
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def fpoly_gcd(F, a, b):
    a, b = fpoly_trim(list(a)), fpoly_trim(list(b))
    while b:
        a, b = b, fpoly_mod(F, a, b)
    return fpoly_monic(F, a)


def fpoly_powmod(F, a, e, f):
    result = [1]
    a = fpoly_mod(F, a, f)
    while e:
        if e & 1:
            result = fpoly_mod(F, fpoly_mul(F, result, a), f)
        e >>= 1
        if e:
            a = fpoly_mod(F, fpoly_mul(F, a, a), f)
    return result


def count_roots(F, g):
    """Number of distinct roots in F of a nonzero polynomial g: deg gcd(g, x^q - x)."""
    g = fpoly_trim(list(g))
    if not g:
        return F.q
    if len(g) == 1:
        return 0
    if len(g) == 2:
        return 1
    h = fpoly_sub(F, fpoly_powmod(F, [0, 1], F.q, g), [0, 1])
    return len(fpoly_gcd(F, g, h)) - 1
