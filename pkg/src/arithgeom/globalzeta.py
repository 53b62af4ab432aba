"""Arithmetic schemes as families of fibres X_p, and their Dirichlet series.

A global series is assembled prime by prime: if n = prod p^e_p then
a_n = prod_p c_p[e_p], where c_p is the local power series of the fibre over
F_p.  Primes whose fibre is too expensive to count are skipped and reported;
identities are then checked only on n built from the remaining primes.
"""

from dataclasses import dataclass, field
from math import isqrt

from .classical import ResourceError, factorize, primes_upto
from .report import FAIL, PASS, Check
from .series import PowerSeries
from .varzeta.variety import ENUMERATION_BUDGET, VarietySpec, builtin, count_sequence, cubic_curve
from .varzeta.zeta import CYCLE_FUNCTIONS, cycle_series, spectrum

GLOBAL_IDENTITIES = ["GLOBAL_PHI", "GLOBAL_SIGMA", "GLOBAL_PSI", "GLOBAL_LAMBDA", "EULER_FACTOR_DISCREPANCY"]
TEMPLATES = ("point", "P1", "Gm", "A1", "A2", "P2", "cubic")


def template(name):
    if name == "cubic":
        return cubic_curve(None)
    return builtin(name, None)


def local_degree(p, nmax):
    """Largest e with p^e <= nmax."""
    e = 0
    while p ** (e + 1) <= nmax:
        e += 1
    return e


@dataclass
class GlobalModel:
    template: VarietySpec
    nmax: int
    prime_bound: int | None = None
    budget: int = ENUMERATION_BUDGET
    _counts: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.template.p is not None:
            self.template = VarietySpec(self.template.ambient, self.template.dim, self.template.polys, None,
                                        self.template.builtin, self.template.times_a1, self.template.name)
        if self.prime_bound is None:
            self.prime_bound = self.nmax

    def primes(self):
        return list(primes_upto(min(self.nmax, self.prime_bound)))

    def fibre(self, p, times_a1=False):
        V = self.template.over(p)
        return V.times_affine_line() if times_a1 else V

    def counts(self, p, times_a1=False):
        key = (p, times_a1)
        if key not in self._counts:
            D = local_degree(p, self.nmax)
            self._counts[key] = count_sequence(self.fibre(p, times_a1), D, budget=self.budget)
        return self._counts[key]


def local_series(model, p, fn, times_a1=False):
    """The fn-series of the fibre X_p, truncated at the largest power of p <= nmax."""
    D = local_degree(p, model.nmax)
    s = spectrum(model.counts(p, times_a1), p)
    return cycle_series(fn, s, D)


@dataclass
class GlobalDirichlet:
    """Coefficients a_1..a_nmax; ``a[n] is None`` when n involves a skipped prime."""

    fn: str
    coeffs: list
    skipped: list

    @property
    def nmax(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n - 1]

    def supported(self):
        return [n for n in range(1, self.nmax + 1) if self.coeffs[n - 1] is not None]


def assemble(local, nmax, skipped=()):
    """a_n = prod_p local[p][e_p]; ``local`` maps primes to PowerSeries."""
    skipped = set(skipped)
    out = [1]
    for n in range(2, nmax + 1):
        a = 1
        for p, e in factorize(n):
            if p in skipped or p not in local:
                a = None
                break
            a *= local[p][e]
        out.append(a)
    return out


def global_dirichlet(model, fn, times_a1=False):
    if fn not in CYCLE_FUNCTIONS:
        raise KeyError(f"unknown function {fn!r}; expected one of {', '.join(CYCLE_FUNCTIONS)}")
    local, skipped = {}, []
    for p in model.primes():
        try:
            local[p] = local_series(model, p, fn, times_a1)
        except ResourceError:
            skipped.append(p)
    return GlobalDirichlet(fn, assemble(local, model.nmax, skipped), skipped)


# -- Dirichlet arithmetic on partially known coefficients ----------------------
# the supported set is closed under divisors, so convolution values at
# supported n only involve known coefficients

def _conv(a, b, n):
    total = 0
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            j = n // i
            total += a(i) * b(j)
            if i != j:
                total += a(j) * b(i)
    return total


def _compare(name, lhs, rhs, indices, params, skipped):
    checked = 0
    for n in indices:
        x, y = lhs(n), rhs(n)
        checked += 1
        if x != y:
            return Check(name, FAIL, params, f"mismatch at n={n}: {x} != {y}", {"n": n, "lhs": x, "rhs": y})
    note = f"; skipped primes {skipped}" if skipped else ""
    return Check(name, PASS, params, f"{checked} coefficients agree{note}")


def _square_supported(a):
    def f(n):
        r = isqrt(n)
        return a[r] if r * r == n else 0
    return f


def literal_euler_local(s, D):
    """The local factor prod_x (1 - (N(x) - 1) t^deg x)^(-1), read literally."""
    q = s.q
    out = PowerSeries.one(D)
    for d in range(1, min(D, s.degree) + 1):
        if s[d]:
            out = out * (PowerSeries.one(D) - PowerSeries.monomial(d, D, q**d - 1)).inverse() ** s[d]
    return out


def verify_global_identity(name, model):
    label = model.template.name or "X"
    params = {"template": label, "nmax": model.nmax}
    zeta = global_dirichlet(model, "zeta")
    skipped = sorted(set(zeta.skipped))
    params["skipped_primes"] = skipped
    z = zeta.__getitem__

    def shifted(n):
        return n * z(n)

    if name == "EULER_FACTOR_DISCREPANCY":
        return euler_factor_discrepancy(model, zeta, params)

    fn = {"GLOBAL_PHI": "phi", "GLOBAL_SIGMA": "sigma1", "GLOBAL_PSI": "psi", "GLOBAL_LAMBDA": "lambda"}.get(name)
    if fn is None:
        raise KeyError(f"unknown global identity {name!r}")
    series = global_dirichlet(model, fn)
    skipped = sorted(set(skipped) | set(series.skipped))
    params["skipped_primes"] = skipped
    a = series.__getitem__
    indices = [n for n in series.supported() if zeta[n] is not None]
    if name == "GLOBAL_PHI":
        # Phi_X = zeta_X(s-1)/zeta_X(s), cleared of the division
        return _compare(name, lambda n: _conv(a, z, n), shifted, indices, params, skipped)
    if name == "GLOBAL_SIGMA":
        return _compare(name, a, lambda n: _conv(z, shifted, n), indices, params, skipped)
    if name == "GLOBAL_PSI":
        za1 = global_dirichlet(model, "zeta", times_a1=True)
        skipped = sorted(set(skipped) | set(za1.skipped))
        params["skipped_primes"] = skipped
        indices = [n for n in indices if za1[n] is not None]
        z2 = _square_supported([None] + zeta.coeffs)
        return _compare(name, lambda n: _conv(a, z2, n), lambda n: _conv(z, za1.__getitem__, n),
                        indices, params, skipped)
    # GLOBAL_LAMBDA: Lambda_X zeta_X(s) = zeta_X(2s)
    z2 = _square_supported([None] + zeta.coeffs)
    return _compare(name, lambda n: _conv(a, z, n), z2, indices, params, skipped)


def euler_factor_discrepancy(model, zeta=None, params=None):
    """Compare the literal Euler product for Phi_X against the zeta quotient.

    The check passes when it exhibits a coefficient where the literal product
    disagrees with Phi_X while Phi_X zeta_X(s) = zeta_X(s-1) holds there.
    """
    name = "EULER_FACTOR_DISCREPANCY"
    params = params or {"template": model.template.name or "X", "nmax": model.nmax}
    zeta = zeta or global_dirichlet(model, "zeta")
    phi = global_dirichlet(model, "phi")
    local = {}
    for p in model.primes():
        if p in phi.skipped or p in zeta.skipped:
            continue
        D = local_degree(p, model.nmax)
        local[p] = literal_euler_local(spectrum(model.counts(p), p), D)
    literal = assemble(local, model.nmax)
    z, a = zeta.__getitem__, phi.__getitem__
    for n in phi.supported():
        if literal[n - 1] is None or zeta[n] is None:
            continue
        if literal[n - 1] != a(n):
            quotient_holds = all(_conv(a, z, m) == m * z(m) for m in range(1, n + 1)
                                 if n % m == 0)
            witness = {"n": n, "literal_product": literal[n - 1], "phi": a(n),
                       "zeta_quotient_holds": quotient_holds}
            status = PASS if quotient_holds else FAIL
            return Check(name, status, params,
                         f"literal Euler product gives {literal[n - 1]} at n={n}, Phi_X gives {a(n)}; "
                         f"Phi_X zeta_X(s) = zeta_X(s-1) {'holds' if quotient_holds else 'fails'} there",
                         None if quotient_holds else {"n": n}, witness)
    return Check(name, FAIL, params, "no discrepancy found between the literal product and Phi_X")
