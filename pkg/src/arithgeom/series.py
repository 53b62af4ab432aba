"""Truncated series with exact coefficients.

Two gradings are supported:

* :class:`DirichletSeries` -- coefficients a_1..a_N, multiplied by Dirichlet
  convolution (the multiplicative grading of N^x).
* :class:`PowerSeries` -- coefficients c_0..c_D, multiplied by the Cauchy
  product (the additive grading of effective 0-cycles by degree).

Coefficients are ``int`` whenever they are integral and ``Fraction``
otherwise, so series quotients stay exact.
"""

from fractions import Fraction
from numbers import Rational


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise TypeError(f"series coefficients must be exact rationals, got {x!r}")
    return x


class PowerSeries:
    """A power series truncated after degree ``order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def monomial(cls, degree, order, coeff=1):
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c, order)

    def __getitem__(self, d):
        return self.coeffs[d]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([other], self.order)
        if other.order != self.order:
            # truncations combine at the coarser order
            m = min(self.order, other.order)
            return PowerSeries(other.coeffs, m)
        return other

    def truncate(self, order):
        return PowerSeries(self.coeffs, order)

    def __add__(self, other):
        other = self._check(other)
        m = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs)], m)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([a * other for a in self.coeffs])
        other = self._check(other)
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (m + 1)
        for i in range(m + 1):
            ai = a[i]
            if ai:
                for j in range(m + 1 - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out, m)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("power series with zero constant term is not invertible")
        inv0 = Fraction(1, 1) / c0
        out = [inv0]
        a = self.coeffs
        for n in range(1, self.order + 1):
            s = sum(a[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s * inv0)
        return PowerSeries(out, self.order)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([Fraction(a) / other for a in self.coeffs])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, q):
        """Substitute t -> q*t."""
        return PowerSeries([c * q**d for d, c in enumerate(self.coeffs)])

    def dilate(self, k):
        """Substitute t -> t^k."""
        out = [0] * (self.order + 1)
        for d, c in enumerate(self.coeffs):
            if d * k > self.order:
                break
            out[d * k] = c
        return PowerSeries(out)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def first_mismatch(self, other):
        """Smallest degree where the two series differ, or ``None``."""
        m = min(self.order, other.order)
        for d in range(m + 1):
            if self.coeffs[d] != other.coeffs[d]:
                return d
        return None

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"


class DirichletSeries:
    """A formal Dirichlet series sum a_n n^{-s}, truncated after n = ``bound``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, bound=None):
        # coeffs[0] is a_1
        coeffs = [_norm(c) for c in coeffs]
        if bound is None:
            bound = len(coeffs)
        if bound < 1:
            raise ValueError("Dirichlet bound must be >= 1")
        coeffs = coeffs[:bound]
        coeffs += [0] * (bound - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_function(cls, f, bound):
        return cls([f(n) for n in range(1, bound + 1)])

    @classmethod
    def one(cls, bound):
        return cls([1], bound)

    @property
    def bound(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        if n < 1:
            raise IndexError("Dirichlet coefficients are indexed from 1")
        return self.coeffs[n - 1]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def items(self):
        return enumerate(self.coeffs, start=1)

    def _check(self, other):
        if not isinstance(other, DirichletSeries):
            raise TypeError("expected a DirichletSeries")
        return other

    def __add__(self, other):
        other = self._check(other)
        m = min(self.bound, other.bound)
        return DirichletSeries([a + b for a, b in zip(self.coeffs[:m], other.coeffs)])

    def __neg__(self):
        return DirichletSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, DirichletSeries):
            return DirichletSeries([a * other for a in self.coeffs])
        m = min(self.bound, other.bound)
        a, b = self.coeffs, other.coeffs
        out = [0] * (m + 1)
        for i in range(1, m + 1):
            ai = a[i - 1]
            if ai:
                for j in range(1, m // i + 1):
                    out[i * j] += ai * b[j - 1]
        return DirichletSeries(out[1:])

    __rmul__ = __mul__

    def inverse(self):
        a1 = self.coeffs[0]
        if a1 == 0:
            raise ZeroDivisionError("Dirichlet series with a_1 = 0 is not invertible")
        inv1 = Fraction(1, 1) / a1
        m = self.bound
        out = [0] * (m + 1)
        out[1] = inv1
        # accumulate sum_{d | n, d > 1} a_d * out[n/d] by sieving
        acc = [0] * (m + 1)
        for n in range(1, m + 1):
            if n > 1:
                out[n] = -acc[n] * inv1
            if out[n]:
                for d in range(2, m // n + 1):
                    acc[n * d] += self.coeffs[d - 1] * out[n]
        return DirichletSeries(out[1:])

    def __truediv__(self, other):
        if not isinstance(other, DirichletSeries):
            return DirichletSeries([Fraction(a) / other for a in self.coeffs])
        return self * other.inverse()

    def shift(self, m):
        """Coefficients n^m a_n, i.e. F(s) -> F(s - m)."""
        return DirichletSeries([n**m * a for n, a in self.items()])

    def dilate(self, k):
        """F(s) -> F(k s): coefficient a_j moves to j^k."""
        out = [0] * self.bound
        j = 1
        while j**k <= self.bound:
            out[j**k - 1] = self.coeffs[j - 1]
            j += 1
        return DirichletSeries(out)

    def __eq__(self, other):
        if isinstance(other, DirichletSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def first_mismatch(self, other):
        m = min(self.bound, other.bound)
        for n in range(1, m + 1):
            if self[n] != other[n]:
                return n
        return None

    def __repr__(self):
        return f"DirichletSeries({list(self.coeffs)!r})"
