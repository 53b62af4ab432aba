"""Free commutative graded monoids and their incidence algebras.

Every monoid here is free on an explicit set of atoms (primes, prime ideals,
closed points).  An element is a finite multiset of atoms; the grading sends
an atom to its weight and extends multiplicatively (norms, N^x) or
additively (degrees of 0-cycles).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .series import DirichletSeries, PowerSeries
from .report import Check, FAIL, PASS

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


class UnknownAtomError(ValueError):
    pass


class LocalFinitenessError(ValueError):
    pass


class NotInvertibleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Atom:
    id: object
    weight: int

    def __post_init__(self):
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"atom weight must be a positive integer, got {self.weight!r}")


class MonoidElement:
    """A finite multiset of atom ids with positive exponents."""

    __slots__ = ("_items", "_hash")

    def __init__(self, multiplicities=None):
        items = []
        for k, v in dict(multiplicities or {}).items():
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"exponent of {k!r} must be a nonnegative integer, got {v!r}")
            if v:
                items.append((k, v))
        items.sort()
        self._items = tuple(items)
        self._hash = hash(self._items)

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def atom(cls, atom_id, exponent=1):
        return cls({atom_id: exponent})

    @classmethod
    def _from_sorted(cls, items):
        e = cls.__new__(cls)
        e._items = items
        e._hash = hash(items)
        return e

    def items(self):
        return self._items

    def support(self):
        return tuple(k for k, _ in self._items)

    def exponent(self, atom_id):
        for k, v in self._items:
            if k == atom_id:
                return v
        return 0

    def is_identity(self):
        return not self._items

    def omega(self):
        """Number of atoms counted with multiplicity."""
        return sum(v for _, v in self._items)

    def is_squarefree(self):
        return all(v == 1 for _, v in self._items)

    def as_dict(self):
        return dict(self._items)

    def __mul__(self, other):
        d = dict(self._items)
        for k, v in other._items:
            d[k] = d.get(k, 0) + v
        return MonoidElement(d)

    def divides(self, other):
        d = dict(other._items)
        return all(d.get(k, 0) >= v for k, v in self._items)

    def __truediv__(self, other):
        d = dict(self._items)
        for k, v in other._items:
            r = d.get(k, 0) - v
            if r < 0:
                raise ValueError(f"{other!r} does not divide {self!r}")
            d[k] = r
        return MonoidElement(d)

    def coprime(self, other):
        return not set(self.support()) & set(other.support())

    def __eq__(self, other):
        return isinstance(other, MonoidElement) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def __repr__(self):
        if not self._items:
            return "MonoidElement(1)"
        body = "*".join(f"{k!r}" if v == 1 else f"{k!r}^{v}" for k, v in self._items)
        return f"MonoidElement({body})"


def divisor_pairs(e):
    """All (d, e/d), in lexicographic order of the exponent vector of d."""
    items = e.items()
    ids = [k for k, _ in items]
    ranges = [range(v + 1) for _, v in items]
    for exps in itertools.product(*ranges):
        d = tuple((k, x) for k, x in zip(ids, exps) if x)
        q = tuple((k, v - x) for (k, v), x in zip(items, exps) if v - x)
        yield MonoidElement._from_sorted(d), MonoidElement._from_sorted(q)


def divisors(e):
    return [d for d, _ in divisor_pairs(e)]


class ArithmeticFunction:
    """A memoized function on monoid elements.

    ``kind`` records how values are produced: ``tabulated``, ``recursive``
    or ``product``.  Caching is safe under concurrent use because every rule
    is deterministic; a racing duplicate evaluation stores the same value.
    """

    def __init__(self, rule, name="f", kind="recursive"):
        self._rule = rule
        self._cache = {}
        self.name = name
        self.kind = kind

    def __call__(self, e):
        try:
            return self._cache[e]
        except KeyError:
            pass
        v = self._rule(e)
        self._cache[e] = v
        return v

    def __add__(self, other):
        return ArithmeticFunction(lambda e: self(e) + other(e), f"({self.name}+{other.name})")

    def __sub__(self, other):
        return ArithmeticFunction(lambda e: self(e) - other(e), f"({self.name}-{other.name})")

    def __neg__(self):
        return ArithmeticFunction(lambda e: -self(e), f"-{self.name}")

    def scale(self, c):
        return ArithmeticFunction(lambda e: c * self(e), f"{c}*{self.name}")

    def __repr__(self):
        return f"<ArithmeticFunction {self.name} ({self.kind})>"


def tabulated(mapping, default=0, name="f"):
    table = dict(mapping)
    return ArithmeticFunction(lambda e: table.get(e, default), name, "tabulated")


def constant(c, name=None):
    return ArithmeticFunction(lambda e: c, name or str(c), "product")


def pointwise(f, g, name=None):
    return ArithmeticFunction(lambda e: f(e) * g(e), name or f"{f.name}.{g.name}")


def convolve(f, g, name=None):
    """(f*g)(x) = sum over d | x of f(d) g(x/d)."""

    def rule(e):
        return sum(f(d) * g(q) for d, q in divisor_pairs(e))

    return ArithmeticFunction(rule, name or f"({f.name}*{g.name})", "recursive")


def delta_function():
    return ArithmeticFunction(lambda e: 1 if e.is_identity() else 0, "delta", "product")


def zeta_function():
    return ArithmeticFunction(lambda e: 1, "zeta", "product")


def mobius_function():
    """Recursive Moebius function: mu(1) = 1, mu(x) = -sum_{ab=x, b!=1} mu(a)."""
    mu = None

    def rule(e):
        if e.is_identity():
            return 1
        return -sum(mu(a) for a, b in divisor_pairs(e) if not b.is_identity())

    mu = ArithmeticFunction(rule, "mu", "recursive")
    return mu


def invert(f, name=None):
    """Convolution inverse of ``f``; needs f(1) to be a unit of the value ring."""
    one = MonoidElement.identity()
    c = f(one)
    if c in (1, -1) and not isinstance(c, Fraction):
        inv_c = int(c)
    elif isinstance(c, Fraction) and c != 0:
        inv_c = 1 / c
    else:
        raise NotInvertibleError(f"{f.name}(1) = {c!r} is not invertible")
    h = None

    def rule(e):
        if e.is_identity():
            return inv_c
        s = sum(f(d) * h(q) for d, q in divisor_pairs(e) if not d.is_identity())
        v = -inv_c * s
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        return v

    h = ArithmeticFunction(rule, name or f"{f.name}^-1", "recursive")
    return h


def multiplicative(monoid, local, name="f"):
    """Product formula f(x) = prod over atoms a^k || x of local(atom, k)."""

    def rule(e):
        v = 1
        for k, exp in e.items():
            v *= local(monoid.atom(k), exp)
        return v

    return ArithmeticFunction(rule, name, "product")


class FreeMonoid:
    """The free commutative monoid on a set of weighted atoms.

    Atoms come from ``atoms`` (finite) and/or ``atom_source``, a callable
    returning every atom of weight <= bound (used for infinite families such
    as the primes).  Each instance carries its own zeta, delta and Moebius
    functions so that memo tables are never shared across monoids.
    """

    def __init__(self, atoms=(), mode=MULTIPLICATIVE, atom_source=None, name="M", max_atoms=10**6):
        if mode not in (MULTIPLICATIVE, ADDITIVE):
            raise ValueError(f"unknown grading mode {mode!r}")
        self.mode = mode
        self.name = name
        self.max_atoms = max_atoms
        self._atoms = {}
        self._source = atom_source
        self._source_bound = 0
        for a in atoms:
            self.register(a)
        self.zeta = zeta_function()
        self.delta = delta_function()
        self.mu = mobius_function()
        self.abs_mu = ArithmeticFunction(lambda e: abs(self.mu(e)), "|mu|", "recursive")
        self.weight_function = ArithmeticFunction(self.weight, "N", "product")

    def register(self, atom):
        if self.mode == MULTIPLICATIVE and atom.weight < 2:
            raise LocalFinitenessError(f"atom {atom.id!r} has multiplicative weight {atom.weight}")
        old = self._atoms.get(atom.id)
        if old is not None and old != atom:
            raise ValueError(f"atom id {atom.id!r} registered twice with different weights")
        self._atoms[atom.id] = atom

    def atom(self, atom_id):
        try:
            return self._atoms[atom_id]
        except KeyError:
            raise UnknownAtomError(f"atom {atom_id!r} is not registered in {self.name}") from None

    def atoms_upto(self, bound):
        if self._source is not None and bound > self._source_bound:
            n = 0
            for a in self._source(bound):
                n += 1
                if n > self.max_atoms:
                    raise LocalFinitenessError(f"more than {self.max_atoms} atoms of weight <= {bound}")
                self.register(a)
            self._source_bound = bound
        atoms = [a for a in self._atoms.values() if a.weight <= bound]
        if len(atoms) > self.max_atoms:
            raise LocalFinitenessError(f"more than {self.max_atoms} atoms of weight <= {bound}")
        atoms.sort(key=lambda a: (a.weight, a.id))
        return atoms

    @property
    def unit_weight(self):
        return 1 if self.mode == MULTIPLICATIVE else 0

    def weight(self, e):
        if self.mode == MULTIPLICATIVE:
            w = 1
            for k, v in e.items():
                w *= self.atom(k).weight ** v
        else:
            w = 0
            for k, v in e.items():
                w += self.atom(k).weight * v
        return w

    def mobius(self, e):
        return self.mu(e)

    def elements_upto(self, bound):
        """Every element of weight <= bound, sorted by (weight, element)."""
        atoms = self.atoms_upto(bound)
        out = []
        mult = self.mode == MULTIPLICATIVE

        def grow(start, w, items):
            out.append((w, MonoidElement._from_sorted(tuple(sorted(items)))))
            for i in range(start, len(atoms)):
                a = atoms[i]
                nw = w * a.weight if mult else w + a.weight
                if nw > bound:
                    break
                k = 1
                while nw <= bound:
                    grow(i + 1, nw, items + [(a.id, k)])
                    k += 1
                    nw = nw * a.weight if mult else nw + a.weight

        if self.unit_weight <= bound:
            grow(0, self.unit_weight, [])
        out.sort(key=lambda t: (t[0], t[1]))
        return [e for _, e in out]

    def __repr__(self):
        return f"FreeMonoid({self.name!r}, {self.mode}, {len(self._atoms)} atoms registered)"


def mobius_inversion_check(f, g, monoid, bound, name="MOBIUS_INVERSION"):
    """Check f = g*zeta and g = f*mu on all elements of weight <= bound."""
    forward = convolve(g, monoid.zeta)
    backward = convolve(f, monoid.mu)
    elements = monoid.elements_upto(bound)
    for e in elements:
        if f(e) != forward(e):
            return Check(name, FAIL, {"bound": bound}, f"f != g*zeta at {e!r}",
                         {"element": repr(e), "weight": monoid.weight(e), "lhs": f(e), "rhs": forward(e)})
        if g(e) != backward(e):
            return Check(name, FAIL, {"bound": bound}, f"g != f*mu at {e!r}",
                         {"element": repr(e), "weight": monoid.weight(e), "lhs": g(e), "rhs": backward(e)})
    return Check(name, PASS, {"bound": bound}, f"f = g*zeta and g = f*mu on {len(elements)} elements")


def pushforward_series(f, monoid, bound):
    """Sum f along the grading: a Dirichlet series (multiplicative) or power series (additive)."""
    if monoid.mode == MULTIPLICATIVE:
        coeffs = [0] * (bound + 1)
        for e in monoid.elements_upto(bound):
            coeffs[monoid.weight(e)] += f(e)
        return DirichletSeries(coeffs[1:], bound)
    coeffs = [0] * (bound + 1)
    for e in monoid.elements_upto(bound):
        coeffs[monoid.weight(e)] += f(e)
    return PowerSeries(coeffs, bound)
