"""Closed-point spectra, zeta functions and 0-cycle generating functions."""

from dataclasses import dataclass
from fractions import Fraction

from ..classical import mu
from ..monoid import ADDITIVE, ArithmeticFunction, Atom, FreeMonoid, convolve, pushforward_series
from ..report import FAIL, PASS, Check, compare_series, merge
from ..series import PowerSeries
from .ffield import make_extension
from .variety import count_sequence, rational_points

CYCLE_FUNCTIONS = ("phi", "sigma1", "psi", "lambda", "zeta")
# degree bound for direct enumeration of 0-cycles
DIRECT_DEGREE = 5
FROBENIUS_DEGREE = 4


class InvalidCountsError(ValueError):
    """Point counts whose Moebius inversion is not a nonnegative integer."""


@dataclass(frozen=True)
class ClosedPointSpectrum:
    q: int
    b: tuple  # b[d-1] = number of closed points of degree d

    @property
    def degree(self):
        return len(self.b)

    def __getitem__(self, d):
        return self.b[d - 1]

    def counts(self):
        """N_m = sum_{d | m} d b_d."""
        return [sum(d * self.b[d - 1] for d in range(1, m + 1) if m % d == 0)
                for m in range(1, len(self.b) + 1)]


def spectrum(counts, q):
    """Moebius inversion b_d = (1/d) sum_{e | d} mu(e) N_{d/e}."""
    b = []
    for d in range(1, len(counts) + 1):
        s = sum(mu(e) * counts[d // e - 1] for e in range(1, d + 1) if d % e == 0)
        if s % d or s < 0:
            raise InvalidCountsError(f"degree {d}: {Fraction(s, d)} closed points from counts {list(counts)}")
        b.append(s // d)
    return ClosedPointSpectrum(q, tuple(b))


def spectrum_of(V, D, method="fiber"):
    return spectrum(count_sequence(V, D, method), V.p)


def _local_product(s, D, factor):
    out = PowerSeries.one(D)
    for d in range(1, min(D, s.degree) + 1):
        if s[d]:
            out = out * factor(d) ** s[d]
    return out


def zeta_series(s, D=None):
    """Z(X, t) = prod_d (1 - t^d)^(-b_d), truncated at t^D."""
    D = s.degree if D is None else D
    return _local_product(s, D, lambda d: (PowerSeries.one(D) - PowerSeries.monomial(d, D)).inverse())


def cycle_series(fn, s, D=None):
    """sum over effective 0-cycles of fn(alpha) t^deg(alpha), via local factors."""
    D = s.degree if D is None else D
    q = s.q
    one = PowerSeries.one(D)

    def t(d, c=1):
        return PowerSeries.monomial(d, D, c)

    if fn == "zeta":
        return zeta_series(s, D)
    if fn == "phi":
        factor = lambda d: one + t(d, q**d - 1) * (one - t(d, q**d)).inverse()
    elif fn == "sigma1":
        factor = lambda d: ((one - t(d)) * (one - t(d, q**d))).inverse()
    elif fn == "psi":
        factor = lambda d: (one + t(d)) * (one - t(d, q**d)).inverse()
    elif fn == "lambda":
        factor = lambda d: (one + t(d)).inverse()
    else:
        raise KeyError(f"unknown cycle function {fn!r}; expected one of {', '.join(CYCLE_FUNCTIONS)}")
    return _local_product(s, D, factor)


# -- the 0-cycle monoid -------------------------------------------------------

class CycleMonoid:
    """Effective 0-cycles on X: the free monoid on closed points, graded by degree.

    Closed points are abstract atoms (d, i) for 0 <= i < b_d; every function
    here depends only on degrees and multiplicities.
    """

    def __init__(self, s, name="Z0(X)"):
        self.spectrum = s
        self.q = q = s.q
        atoms = [Atom((d, i), d) for d in range(1, s.degree + 1) for i in range(s[d])]
        self.monoid = M = FreeMonoid(atoms, ADDITIVE, name=name)
        # pi(alpha) = q^deg(alpha): the norm of the quotient ring at alpha
        self.pi = ArithmeticFunction(lambda e: q ** M.weight(e), "pi", "product")
        self.phi = ArithmeticFunction(
            lambda e: _prod((q**d - 1) * q ** (d * (a - 1)) for (d, _), a in e.items()), "phi_X", "product")
        self.sigma1 = convolve(self.pi, M.zeta, "sigma1_X")
        self.psi = ArithmeticFunction(
            lambda e: _prod((q**d + 1) * q ** (d * (a - 1)) for (d, _), a in e.items()), "psi_X", "product")
        self.liouville = ArithmeticFunction(lambda e: (-1) ** e.omega(), "lambda_X", "product")

    def function(self, fn):
        if fn == "zeta":
            return self.monoid.zeta
        return {"phi": self.phi, "sigma1": self.sigma1, "psi": self.psi, "lambda": self.liouville}[fn]

    def pushforward(self, fn, D):
        return pushforward_series(self.function(fn), self.monoid, D)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def direct_cycle_series(fn, s, D=DIRECT_DEGREE):
    return CycleMonoid(s).pushforward(fn, min(D, s.degree))


# -- Frobenius orbits ---------------------------------------------------------

def frobenius_orbit_count(V, d):
    """Closed points of degree d as Frobenius orbits of size exactly d on V(F_{q^d})."""
    F = make_extension(V.p, d)
    pts = rational_points(V, d)
    seen = set()
    count = 0
    for x in pts:
        if x in seen:
            continue
        orbit = [x]
        y = tuple(F.frobenius(c) for c in x)
        while y != x:
            orbit.append(y)
            y = tuple(F.frobenius(c) for c in y)
        seen.update(orbit)
        if len(orbit) == d:
            count += 1
    return count


# -- identity checks ----------------------------------------------------------

VARIETY_IDENTITIES = ["SPECTRUM", "ZETA_CYCLES", "PHI_X_QUOTIENT", "SIGMA_X_PRODUCT", "PSI_X_FORMULA",
                      "LAMBDA_X_QUOTIENT", "PRODUCT_A1", "FROBENIUS"]


def default_degree(q):
    return 8 if q <= 3 else 4


class VarietyData:
    """Counts, spectrum and zeta series of one variety, computed once."""

    def __init__(self, V, D=None):
        self.V = V
        self.q = V.p
        self.D = default_degree(V.p) if D is None else D
        self.counts = count_sequence(V, self.D)
        self.error = None
        try:
            self.spectrum = spectrum(self.counts, self.q)
        except InvalidCountsError as exc:
            self.spectrum = None
            self.error = str(exc)
        self._a1 = None

    @property
    def Z(self):
        return zeta_series(self.spectrum, self.D)

    def a1_counts(self):
        if self._a1 is None:
            self._a1 = count_sequence(self.V.times_affine_line(), self.D)
        return self._a1


def verify_variety_identity(name, V, D=None, data=None):
    data = data or VarietyData(V, D)
    D = data.D
    q = data.q
    params = {"variety": V.label(), "q": q, "D": D}
    if data.spectrum is None:
        return Check(name, FAIL, params, data.error, {"degree": _bad_degree(data.counts, q), "counts": data.counts})
    s = data.spectrum
    Z = data.Z

    def with_direct(fn, rhs, label):
        direct = direct_cycle_series(fn, s, DIRECT_DEGREE)
        series = cycle_series(fn, s, D)
        return merge(name, [
            compare_series(label, series, rhs, label="degree"),
            compare_series(f"{fn} local factors = direct 0-cycle sum", series.truncate(direct.order), direct,
                           label="degree"),
        ], params)

    if name == "SPECTRUM":
        recon = s.counts()
        if recon != list(data.counts):
            m = next(i for i, (a, b) in enumerate(zip(recon, data.counts), 1) if a != b)
            return Check(name, FAIL, params, f"N_{m} reconstructs as {recon[m - 1]}, counted {data.counts[m - 1]}",
                         {"degree": m, "lhs": recon[m - 1], "rhs": data.counts[m - 1]})
        return Check(name, PASS, params, f"b = {list(s.b)} nonnegative integers; N = {data.counts} reconstructed")
    if name == "ZETA_CYCLES":
        direct = direct_cycle_series("zeta", s, DIRECT_DEGREE)
        if not Z.is_integral() or any(x < 0 for x in Z):
            return Check(name, FAIL, params, f"zeta coefficients {list(Z)} are not nonnegative integers")
        return compare_series(name, Z.truncate(direct.order), direct, params, label="degree")
    if name == "PHI_X_QUOTIENT":
        return with_direct("phi", Z.scale(q) / Z, "Z(X,qt)/Z(X,t)")
    if name == "SIGMA_X_PRODUCT":
        return with_direct("sigma1", Z * Z.scale(q), "Z(X,t)Z(X,qt)")
    if name == "PSI_X_FORMULA":
        return with_direct("psi", Z * Z.scale(q) / Z.dilate(2), "Z(X,t)Z(X,qt)/Z(X,t^2)")
    if name == "LAMBDA_X_QUOTIENT":
        return with_direct("lambda", Z.dilate(2) / Z, "Z(X,t^2)/Z(X,t)")
    if name == "PRODUCT_A1":
        counts = data.a1_counts()
        try:
            s1 = spectrum(counts, q)
        except InvalidCountsError as exc:
            return Check(name, FAIL, params, f"X x A1: {exc}")
        return compare_series(name, zeta_series(s1, D), Z.scale(q), params, label="degree")
    if name == "FROBENIUS":
        top = min(D, FROBENIUS_DEGREE)
        for d in range(1, top + 1):
            got = frobenius_orbit_count(V, d)
            if got != s[d]:
                return Check(name, FAIL, params, f"degree {d}: {got} Frobenius orbits, spectrum says {s[d]}",
                             {"degree": d, "lhs": got, "rhs": s[d]})
        return Check(name, PASS, params, f"orbit counts match b_d for d <= {top}")
    raise KeyError(f"unknown variety identity {name!r}")


def _bad_degree(counts, q):
    for D in range(1, len(counts) + 1):
        try:
            spectrum(counts[:D], q)
        except InvalidCountsError:
            return D
    return None


def verify_variety(V, D=None, identities=None):
    data = VarietyData(V, D)
    return [verify_variety_identity(n, V, data=data) for n in (identities or VARIETY_IDENTITIES)]
