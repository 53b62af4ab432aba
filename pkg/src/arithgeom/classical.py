"""Classical arithmetic functions on N^x and their identities."""

import enum
import itertools
import math
import threading
from bisect import bisect_right

from .monoid import Atom, FreeMonoid, MonoidElement, MULTIPLICATIVE
from .report import Check, FAIL, PASS, compare, compare_series, merge
from .series import DirichletSeries

SIGMA_MAX_POWER = 8
SL2_CAP = 24


class ResourceError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its cap."""


# -- primes -----------------------------------------------------------------

_sieve_lock = threading.Lock()
_primes = [2, 3, 5, 7]
_sieve_limit = 10


def primes_upto(n):
    """All primes <= n, from a shared sieve that grows on demand."""
    global _primes, _sieve_limit
    if n > _sieve_limit:
        with _sieve_lock:
            if n > _sieve_limit:
                limit = max(n, 2 * _sieve_limit)
                flags = bytearray([1]) * (limit + 1)
                flags[0] = flags[1] = 0
                for i in range(2, math.isqrt(limit) + 1):
                    if flags[i]:
                        flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
                _primes = [i for i in range(limit + 1) if flags[i]]
                _sieve_limit = limit
    return _primes[: bisect_right(_primes, n)]


def is_prime(n):
    if n < 2:
        return False
    if n <= _sieve_limit:
        i = bisect_right(_primes, n)
        return _primes[i - 1] == n
    return factorize(n) == [(n, 1)]


def factorize(n):
    """Prime factorization [(p, k), ...] with p increasing, by trial division."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n!r}")
    out = []
    for p in primes_upto(math.isqrt(n)):
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
    if n > 1:
        out.append((n, 1))
    return out


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"arithmetic functions are defined for n >= 1, got {n}")


# -- N^x as a free monoid ---------------------------------------------------

def natural_monoid():
    """N^x: free on the primes, multiplicatively graded by p."""
    return FreeMonoid(mode=MULTIPLICATIVE, name="N",
                      atom_source=lambda bound: (Atom(p, p) for p in primes_upto(bound)))


def element_of(n, monoid=None):
    fac = factorize(n)
    if monoid is not None:
        for p, _ in fac:
            monoid.register(Atom(p, p))
    return MonoidElement(dict(fac))


def value_of(e):
    n = 1
    for p, k in e.items():
        n *= p**k
    return n


# -- the functions ----------------------------------------------------------

def phi(n):
    _check_positive(n)
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def phi_by_count(n):
    _check_positive(n)
    return sum(1 for r in range(1, n + 1) if math.gcd(r, n) == 1)


def sigma(m, n):
    _check_positive(n)
    if not 0 <= m <= SIGMA_MAX_POWER:
        raise ValueError(f"sigma_m is implemented for 0 <= m <= {SIGMA_MAX_POWER}")
    r = 1
    for p, k in factorize(n):
        r *= sum(p ** (m * j) for j in range(k + 1))
    return r


def sigma1(n):
    return sigma(1, n)


def psi(n):
    _check_positive(n)
    r = n
    for p, _ in factorize(n):
        r = r // p * (p + 1)
    return r


def big_omega(n):
    _check_positive(n)
    return sum(k for _, k in factorize(n))


def liouville(n):
    return -1 if big_omega(n) % 2 else 1


def mu(n):
    _check_positive(n)
    fac = factorize(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def abs_mu(n):
    return abs(mu(n))


def chi_minus1(n):
    _check_positive(n)
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def r2(n):
    """Ordered signed pairs (x, y) with x^2 + y^2 = n, by scanning |x|, |y| <= sqrt(n)."""
    _check_positive(n)
    b = math.isqrt(n)
    return sum(1 for x in range(-b, b + 1) for y in range(-b, b + 1) if x * x + y * y == n)


def identity(n):
    _check_positive(n)
    return n


def zeta(n):
    _check_positive(n)
    return 1


def delta(n):
    _check_positive(n)
    return 1 if n == 1 else 0


def square_indicator(n):
    _check_positive(n)
    return 1 if math.isqrt(n) ** 2 == n else 0


def squarefree_part(n):
    r = 1
    for p, k in factorize(n):
        if k % 2:
            r *= p
    return r


class ClassicalFnId(enum.Enum):
    zeta = "zeta"
    mu = "mu"
    abs_mu = "abs_mu"
    id = "id"
    id_pow_m = "id_pow_m"
    phi = "phi"
    sigma_m = "sigma_m"
    psi = "psi"
    lambda_ = "lambda"
    chi_minus1 = "chi_minus1"
    r2 = "r2"
    delta = "delta"
    square_indicator = "square_indicator"


def classical_function(name):
    """Look up a classical function by table name (``sigma3``, ``id2``, ``phi`` ...)."""
    table = {
        "zeta": zeta, "mu": lambda n: mu(n), "abs_mu": abs_mu, "id": identity, "phi": phi,
        "psi": psi, "lambda": liouville, "chi_minus1": chi_minus1, "r2": r2, "delta": delta,
        "square_indicator": square_indicator,
    }
    if name in table:
        return table[name]
    for prefix, make in (("sigma", lambda m: lambda n: sigma(m, n)),
                         ("id", lambda m: lambda n: identity(n) ** m)):
        rest = name[len(prefix):]
        if name.startswith(prefix) and rest.isdigit() and int(rest) <= SIGMA_MAX_POWER:
            return make(int(rest))
    raise KeyError(f"unknown classical function {name!r}")


CLASSICAL_NAMES = ["zeta", "mu", "abs_mu", "id", "phi", "psi", "lambda", "chi_minus1", "r2",
                   "delta", "square_indicator"] + [f"sigma{m}" for m in range(SIGMA_MAX_POWER + 1)]


# -- oracles ----------------------------------------------------------------

def dirichlet_convolve(f, g, n):
    return sum(f(d) * g(n // d) for d in divisors_of(n))


def divisors_of(n):
    ds = [1]
    for p, k in factorize(n):
        ds = [d * p**j for d in ds for j in range(k + 1)]
    return sorted(ds)


def p1_count(n):
    """#P^1(Z/n): pairs (a, b) mod n with gcd(a, b, n) = 1, divided by #(Z/n)^x."""
    _check_positive(n)
    if n == 1:
        return 1
    pairs = sum(1 for a in range(n) for b in range(n) if math.gcd(math.gcd(a, b), n) == 1)
    units = sum(1 for a in range(n) if math.gcd(a, n) == 1)
    if pairs % units:
        raise ArithmeticError(f"unimodular pair count {pairs} not divisible by {units}")
    return pairs // units


def sl2_index(n, cap=SL2_CAP):
    """[SL_2(Z/n) : upper triangular mod n], by enumerating all n^4 matrices.

    Relies on SL_2(Z) -> SL_2(Z/n) being surjective, so the index in SL_2(Z)
    of Gamma_0(n) equals the index computed in the finite quotient.
    """
    _check_positive(n)
    if n > cap:
        raise ResourceError(f"sl2_index enumerates n^4 matrices; n={n} exceeds cap {cap}")
    if n == 1:
        return 1
    total = borel = 0
    rng = range(n)
    for a, b, c, d in itertools.product(rng, rng, rng, rng):
        if (a * d - b * c) % n == 1 % n:
            total += 1
            if c == 0:
                borel += 1
    if total % borel:
        raise ArithmeticError("subgroup order does not divide group order")
    return total // borel


# -- identity verification --------------------------------------------------

def _series(f, bound):
    return DirichletSeries.from_function(f, bound)


def _check_mu_zeta_delta(bound):
    return compare("MU_ZETA_DELTA", lambda n: dirichlet_convolve(mu, zeta, n), delta,
                   range(1, bound + 1), {"bound": bound})


def _check_phi_recursion(bound):
    return compare("PHI_RECURSION", lambda n: sum(phi(d) for d in divisors_of(n)), identity,
                   range(1, bound + 1), {"bound": bound})


def _check_phi_mu(bound):
    return compare("PHI_MU", phi, lambda n: dirichlet_convolve(identity, mu, n),
                   range(1, bound + 1), {"bound": bound})


def _check_phi_zeta_quotient(bound):
    z = _series(zeta, bound)
    return merge("PHI_ZETA_QUOTIENT", [
        compare_series("phi*zeta = id", _series(phi, bound) * z, z.shift(1)),
        compare_series("phi = zeta(s-1)/zeta(s)", _series(phi, bound), z.shift(1) / z),
    ], {"bound": bound})


def _check_sigma_series(bound):
    z = _series(zeta, bound)
    checks = []
    for m in range(SIGMA_MAX_POWER + 1):
        checks.append(compare_series(f"sigma_{m}", _series(lambda n: sigma(m, n), bound), z * z.shift(m)))
    return merge("SIGMA_SERIES", checks, {"bound": bound, "m": f"0..{SIGMA_MAX_POWER}"})


def _check_sigma_p1(bound):
    # brute-force P^1 counts are quadratic in n
    b = min(bound, P1_COUNT_BOUND)
    return compare("SIGMA_P1_COUNT", sigma1, p1_count, range(1, b + 1), {"bound": b})


def _check_psi_p1(bound):
    b = min(bound, P1_COUNT_BOUND)
    return compare("PSI_P1_COUNT", psi, p1_count, range(1, b + 1), {"bound": b})


def _check_psi_absmu(bound):
    z = _series(zeta, bound)
    return merge("PSI_ABSMU", [
        compare("psi = id*|mu|", psi, lambda n: dirichlet_convolve(identity, abs_mu, n), range(1, bound + 1)),
        compare_series("psi*zeta(2s) = zeta(s)zeta(s-1)", _series(psi, bound) * z.dilate(2), z * z.shift(1)),
    ], {"bound": bound})


def _check_lambda_square(bound):
    return compare("LAMBDA_SQUARE", lambda n: sum(liouville(d) for d in divisors_of(n)), square_indicator,
                   range(1, bound + 1), {"bound": bound})


def _check_lambda_mu_sqfree(bound):
    def square_sum(n):
        return sum(mu(n // (d * d)) for d in range(1, math.isqrt(n) + 1) if n % (d * d) == 0)

    return merge("LAMBDA_MU_SQFREE_PART", [
        compare("lambda(n) = mu(n')", liouville, lambda n: mu(squarefree_part(n)), range(1, bound + 1)),
        compare("lambda(n) = sum_{d^2|n} mu(n/d^2)", liouville, square_sum, range(1, bound + 1)),
    ], {"bound": bound})


def _check_lambda_absmu_delta(bound):
    z = _series(zeta, bound)
    return merge("LAMBDA_ABSMU_DELTA", [
        compare("lambda*|mu| = delta", lambda n: dirichlet_convolve(liouville, abs_mu, n), delta,
                range(1, bound + 1)),
        compare_series("lambda*zeta(s) = zeta(2s)", _series(liouville, bound) * z, z.dilate(2)),
    ], {"bound": bound})


def _check_r2_chi(bound):
    return compare("R2_CHI", r2, lambda n: 4 * dirichlet_convolve(zeta, chi_minus1, n),
                   range(1, bound + 1), {"bound": bound})


CLASSICAL_IDENTITIES = {
    "MU_ZETA_DELTA": _check_mu_zeta_delta,
    "PHI_RECURSION": _check_phi_recursion,
    "PHI_MU": _check_phi_mu,
    "PHI_ZETA_QUOTIENT": _check_phi_zeta_quotient,
    "SIGMA_SERIES": _check_sigma_series,
    "SIGMA_P1_COUNT": _check_sigma_p1,
    "PSI_P1_COUNT": _check_psi_p1,
    "PSI_ABSMU": _check_psi_absmu,
    "LAMBDA_SQUARE": _check_lambda_square,
    "LAMBDA_MU_SQFREE_PART": _check_lambda_mu_sqfree,
    "LAMBDA_ABSMU_DELTA": _check_lambda_absmu_delta,
    "R2_CHI": _check_r2_chi,
}

P1_COUNT_BOUND = 60


def verify_classical_identity(name, bound):
    if bound < 1:
        raise ValueError("bound must be >= 1")
    try:
        check = CLASSICAL_IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown classical identity {name!r}") from None
    return check(bound)


def euler_check(bound):
    """a^phi(n) = 1 mod n for all 2 <= n <= bound and units a mod n."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    tested = 0
    for n in range(2, bound + 1):
        e = phi(n)
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                tested += 1
                if pow(a, e, n) != 1:
                    return Check("EULER", FAIL, {"bound": bound}, f"{a}^{e} != 1 mod {n}",
                                 {"n": n, "a": a, "lhs": pow(a, e, n), "rhs": 1})
    return Check("EULER", PASS, {"bound": bound}, f"{tested} pairs (a, n), 0 failures")


def sl2_check(bound=SL2_CAP):
    return compare("SL2_INDEX", sl2_index, psi, range(1, bound + 1), {"bound": bound})
