"""Varieties over F_p given by explicit equations, and their point counts."""

import itertools
from dataclasses import dataclass, replace

from ..classical import ResourceError, is_prime
from ..poly import IntPoly
from .ffield import count_roots, make_extension
from .parse import ParseError, parse_polynomial

AFFINE = "affine"
PROJECTIVE = "projective"

# tuples enumerated per count (naive method) or prefixes per fiber (fiber method)
ENUMERATION_BUDGET = 2**24

BUILTINS = ("point", "A1", "A2", "Gm", "P1", "P2")


@dataclass(frozen=True)
class VarietySpec:
    """A closed subvariety of affine or projective n-space, optionally times A^1.

    ``p`` is the base prime; ``None`` marks a global template over Z whose
    fibres are taken by reducing coefficients mod p.
    """

    ambient: str
    dim: int
    polys: tuple = ()
    p: int | None = None
    builtin: str | None = None
    times_a1: int = 0
    name: str = ""

    def __post_init__(self):
        if self.ambient not in (AFFINE, PROJECTIVE):
            raise ValueError(f"ambient must be affine or projective, got {self.ambient!r}")
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        for f in self.polys:
            if f.nvars != self.ncoords:
                raise ValueError(f"polynomial {f!r} is not in {self.ncoords} coordinates")
            if self.ambient == PROJECTIVE:
                bad = f.homogeneity_violation()
                if bad is not None:
                    raise ValueError(f"projective equation {f.format()} is not homogeneous: "
                                     f"monomial {f.monomial_str(bad)} has degree {sum(bad)}")
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"base {self.p} is not prime")

    @property
    def ncoords(self):
        return self.dim + 1 if self.ambient == PROJECTIVE else self.dim

    @property
    def is_global(self):
        return self.p is None

    def over(self, p):
        """The fibre over F_p: same equations, coefficients reduced mod p."""
        return replace(self, p=p)

    def times_affine_line(self):
        return replace(self, times_a1=self.times_a1 + 1,
                       name=(self.name or "X") + " x A1")

    def label(self):
        base = self.name or self.builtin or "V"
        return base if self.p is None else f"{base}/F_{self.p}"


def builtin(name, p=None):
    if name == "point":
        return VarietySpec(AFFINE, 0, (), p, "point", name="point")
    if name == "A1":
        return VarietySpec(AFFINE, 1, (), p, "A1", name="A1")
    if name == "A2":
        return VarietySpec(AFFINE, 2, (), p, "A2", name="A2")
    if name == "Gm":
        # x*y = 1 inside A^2
        f = IntPoly.var(2, 0) * IntPoly.var(2, 1) - 1
        return VarietySpec(AFFINE, 2, (f,), p, "Gm", name="Gm")
    if name == "P1":
        return VarietySpec(PROJECTIVE, 1, (), p, "P1", name="P1")
    if name == "P2":
        return VarietySpec(PROJECTIVE, 2, (), p, "P2", name="P2")
    raise ValueError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTINS)}")


def hypersurface(ambient, dim, equations, p=None, name=""):
    nv = dim + 1 if ambient == PROJECTIVE else dim
    polys = tuple(parse_polynomial(e, nv) if isinstance(e, str) else e for e in equations)
    return VarietySpec(ambient, dim, polys, p, name=name)


CUBIC_CURVE = "y^2*z - x^3 + x*z^2"


def cubic_curve(p=3):
    """The plane cubic y^2 z = x^3 - x z^2."""
    return hypersurface(PROJECTIVE, 2, [CUBIC_CURVE], p, name="cubic")


SPEC_KEYS = {"p", "ambient", "dim", "poly", "builtin", "times", "global", "name"}


def parse_variety_spec(text):
    """Parse a ``key=value`` variety spec file; errors carry line and column."""
    fields = {}
    polys = []
    is_global = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            key = line.strip()
            if key == "global":
                is_global = True
                continue
            raise ParseError(f"expected key=value, got {key!r}", lineno, len(raw) - len(raw.lstrip()) + 1)
        key, value = line.split("=", 1)
        col = len(key) + 2
        key = key.strip()
        if key not in SPEC_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, raw.index(key) + 1)
        if key == "poly":
            lead = len(value) - len(value.lstrip())
            polys.append((value.strip(), lineno, col + lead))
        elif key == "global":
            if value.strip().lower() not in ("", "1", "true", "yes"):
                raise ParseError("global takes no value", lineno, col)
            is_global = True
        else:
            if key in fields:
                raise ParseError(f"duplicate key {key!r}", lineno, 1)
            fields[key] = (value.strip(), lineno, col)

    def int_field(key):
        v, ln, c = fields[key]
        try:
            return int(v)
        except ValueError:
            raise ParseError(f"{key} must be an integer, got {v!r}", ln, c) from None

    p = None
    if "p" in fields:
        if is_global:
            raise ParseError("a spec is either global or has p=", fields["p"][1], 1)
        p = int_field("p")
        if not is_prime(p):
            raise ParseError(f"p={p} is not prime", fields["p"][1], fields["p"][2])

    times = 0
    if "times" in fields:
        v, ln, c = fields["times"]
        if v != "A1":
            raise ParseError(f"times must be A1, got {v!r}", ln, c)
        times = 1

    if "builtin" in fields:
        v, ln, c = fields["builtin"]
        for k in ("ambient", "dim"):
            if k in fields:
                raise ParseError(f"{k} cannot be combined with builtin", fields[k][1], 1)
        if polys:
            raise ParseError("poly cannot be combined with builtin", polys[0][1], 1)
        try:
            spec = builtin(v, p)
        except ValueError as exc:
            raise ParseError(str(exc), ln, c) from None
    else:
        if "ambient" not in fields or "dim" not in fields:
            raise ParseError("spec needs builtin=, or ambient= and dim=", None, None)
        ambient, ln, c = fields["ambient"]
        if ambient not in (AFFINE, PROJECTIVE):
            raise ParseError(f"ambient must be affine or projective, got {ambient!r}", ln, c)
        dim = int_field("dim")
        if dim < 0 or dim > 9:
            raise ParseError("dim must be between 0 and 9", fields["dim"][1], fields["dim"][2])
        nv = dim + 1 if ambient == PROJECTIVE else dim
        parsed = []
        for text_, ln, c in polys:
            try:
                f = parse_polynomial(text_, nv)
            except ParseError as exc:
                raise ParseError(exc.message, ln, c + (exc.column or 1) - 1) from None
            if ambient == PROJECTIVE:
                bad = f.homogeneity_violation()
                if bad is not None:
                    raise ParseError(f"equation is not homogeneous: monomial {f.monomial_str(bad)} "
                                     f"has degree {sum(bad)}, expected {f.total_degree()}", ln, c)
            parsed.append(f)
        spec = VarietySpec(ambient, dim, tuple(parsed), p)
    name = fields["name"][0] if "name" in fields else spec.name
    return replace(spec, times_a1=times, name=name)


def read_variety_spec(path):
    with open(path) as fh:
        return parse_variety_spec(fh.read())


# -- point counting -----------------------------------------------------------

def _field_polys(polys, F):
    """Reduce integer polynomials into {exponents: field element} over F."""
    out = []
    for f in polys:
        terms = {}
        for e, c in f.terms.items():
            v = F.from_int(c)
            if v:
                terms[e] = v
        out.append(terms)
    return out


def _collapse(polys, fixed, F):
    """Like _specialize but adds coefficients of monomials that collide."""
    out = []
    for terms in polys:
        new = {}
        for e, c in terms.items():
            if any(e[i] and v == 0 for i, v in fixed.items()):
                continue
            reduced = tuple(k for i, k in enumerate(e) if i not in fixed)
            new[reduced] = F.add(new.get(reduced, 0), c)
        out.append({e: c for e, c in new.items() if c})
    return out


def _eval_monomial(F, e, values):
    # values are field elements; exponents may be large
    if not any(e):
        return 1
    log = F.log
    s = 0
    for x, k in zip(values, e):
        if k:
            if x == 0:
                return 0
            s += log[x] * k
    return F.exp[s % F.order]


def count_affine(polys, nvars, F, budget=ENUMERATION_BUDGET):
    """#{x in F^nvars : f(x) = 0 for all f}, enumerating all but one coordinate.

    The last coordinate occurring in the equations is solved for: each fibre
    is a univariate system whose common roots are counted by a gcd with
    x^q - x.  Coordinates that occur in no equation contribute a factor q.
    """
    polys = [t for t in polys]
    if any(not t for t in polys):
        # zero polynomials impose no condition
        polys = [t for t in polys if t]
    used = sorted({i for t in polys for e in t for i, k in enumerate(e) if k})
    q = F.q
    free = nvars - len(used)
    if not used:
        if any(t for t in polys):
            return 0  # nonzero constants
        return q**nvars
    solve = used[-1]
    rest = used[:-1]
    if q ** len(rest) > budget:
        raise ResourceError(f"fibre enumeration needs {q}^{len(rest)} prefixes, over budget {budget}")
    # group each polynomial by the power of the solve variable
    grouped = []
    for t in polys:
        g = {}
        for e, c in t.items():
            g.setdefault(e[solve], []).append((c, tuple(e[i] for i in rest)))
        grouped.append(g)
    total = 0
    for prefix in itertools.product(range(q), repeat=len(rest)):
        system = []
        for g in grouped:
            deg = max(g)
            coeffs = [0] * (deg + 1)
            for j, terms in g.items():
                acc = 0
                for c, e in terms:
                    m = _eval_monomial(F, e, prefix)
                    if m:
                        acc = F.add(acc, F.mul(c, m))
                coeffs[j] = acc
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            system.append(coeffs)
        total += _common_roots(F, system)
    return total * q**free


def _common_roots(F, system):
    from .ffield import fpoly_gcd

    g = []
    for s in system:
        if s:
            g = s if not g else fpoly_gcd(F, g, s)
            if len(g) == 1:
                return 0
    if not g:
        return F.q
    return count_roots(F, g)


def count_points(V, m, method="fiber", budget=ENUMERATION_BUDGET):
    """N_m = #V(F_{p^m})."""
    if V.p is None:
        raise ValueError("global template: choose a fibre with V.over(p) first")
    F = make_extension(V.p, m)
    if method == "naive":
        return len(rational_points(V, m, budget))
    polys = _field_polys(V.polys, F)
    extra = V.times_a1
    n = V.ncoords
    if V.ambient == AFFINE:
        padded = [{e + (0,) * extra: c for e, c in t.items()} for t in polys]
        return count_affine(padded, n + extra, F, budget)
    total = 0
    # projective space as a disjoint union of affine cells x_0 = .. = x_{i-1} = 0, x_i = 1
    for i in range(n):
        fixed = {j: 0 for j in range(i)}
        fixed[i] = 1
        cell = _collapse(polys, fixed, F)
        padded = [{e + (0,) * extra: c for e, c in t.items()} for t in cell]
        total += count_affine(padded, n - i - 1 + extra, F, budget)
    return total


def rational_points(V, m, budget=ENUMERATION_BUDGET):
    """Explicit list of F_{p^m}-points, by full enumeration.

    Projective points are normalized so their first nonzero coordinate is 1;
    the count of nonzero solution tuples is checked to be (q-1) times that.
    """
    F = make_extension(V.p, m)
    q = F.q
    n = V.ncoords
    extra = V.times_a1
    polys = _field_polys(V.polys, F)
    if q ** (n + extra) > budget:
        raise ResourceError(f"enumerating {q}^{n + extra} tuples exceeds budget {budget}")

    def satisfies(x):
        for t in polys:
            acc = 0
            for e, c in t.items():
                mval = _eval_monomial(F, e, x)
                if mval:
                    acc = F.add(acc, F.mul(c, mval))
            if acc:
                return False
        return True

    points = []
    nonzero_solutions = 0
    for x in itertools.product(range(q), repeat=n):
        if V.ambient == PROJECTIVE:
            if not any(x):
                continue
            if not satisfies(x):
                continue
            nonzero_solutions += 1
            first = next(v for v in x if v)
            if first != 1:
                continue
        elif not satisfies(x):
            continue
        for tail in itertools.product(range(q), repeat=extra):
            points.append(x + tail)
    if V.ambient == PROJECTIVE:
        normalized = len(points) // (q**extra)
        if nonzero_solutions != (q - 1) * normalized:
            raise ArithmeticError(f"{nonzero_solutions} nonzero solutions not (q-1) * {normalized}")
    return points


def count_sequence(V, D, method="fiber", budget=ENUMERATION_BUDGET):
    """[N_1, ..., N_D]."""
    return [count_points(V, m, method, budget) for m in range(1, D + 1)]
