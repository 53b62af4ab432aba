"""p-typical Witt vectors of finite length over finite fields.

Addition and multiplication come from the universal integer polynomials
S_n, P_n, solved once over Z from the ghost equations and then reduced
mod p.  On top of that: unit groups, the quotients
G(p^k) = W_k(F_{p^2})^x / W_k(F_p)^x and G(n), whose orders are checked
against Dedekind's psi.
"""

import random
from itertools import product
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache

from .classical import ResourceError, factorize, psi
from .poly import IntPoly
from .report import FAIL, PASS, Check
from .varzeta.ffield import make_extension

MAX_LENGTH = 4
# W_k(F_q) with q^k above this is not enumerated
GROUP_BUDGET = 5**6
# triples checked exhaustively for the ring axioms when #W <= this
AXIOM_EXHAUSTIVE = 16
GHOST_SAMPLES = 200


def ghost(v, p):
    """w_i = sum_{j <= i} p^j v_j^(p^(i-j))."""
    return [sum(p**j * v[j] ** (p ** (i - j)) for j in range(i + 1)) for i in range(len(v))]


@dataclass
class WittUniversalPolys:
    p: int
    k: int
    S: list
    P: list

    def sizes(self):
        return {"S": [len(f) for f in self.S], "P": [len(f) for f in self.P]}


@lru_cache(maxsize=None)
def universal_polys(p, k):
    """S_n, P_n in X_0..X_{k-1}, Y_0..Y_{k-1} with w_n(S) = w_n(X) + w_n(Y), w_n(P) = w_n(X) w_n(Y).

    Each step divides by p^n; ``IntPoly.exact_div`` raises if that is not exact.
    """
    if k < 1 or k > MAX_LENGTH:
        raise ResourceError(f"Witt length must be in 1..{MAX_LENGTH}, got {k}")
    nv = 2 * k
    X = [IntPoly.var(nv, i) for i in range(k)]
    Y = [IntPoly.var(nv, k + i) for i in range(k)]

    def w(Z, n):
        out = IntPoly(nv)
        for j in range(n + 1):
            out = out + p**j * Z[j] ** (p ** (n - j))
        return out

    S, P = [], []
    for n in range(k):
        wx, wy = w(X, n), w(Y, n)
        a, b = wx + wy, wx * wy
        for j in range(n):
            a = a - p**j * S[j] ** (p ** (n - j))
            b = b - p**j * P[j] ** (p ** (n - j))
        S.append(a.exact_div(p**n))
        P.append(b.exact_div(p**n))
    return WittUniversalPolys(p, k, S, P)


def witt_sum_int(u, v, p):
    """Witt sum of integer vectors, by evaluating S over Z."""
    U = universal_polys(p, len(u))
    return [f.evaluate(list(u) + list(v)) for f in U.S]


def witt_product_int(u, v, p):
    U = universal_polys(p, len(u))
    return [f.evaluate(list(u) + list(v)) for f in U.P]


def ghost_homomorphism_check(p, k, samples=GHOST_SAMPLES, seed=0, spread=10):
    rng = random.Random(seed)
    name = "GHOST_HOMOMORPHISM"
    params = {"p": p, "k": k, "samples": samples, "seed": seed}
    for _ in range(samples):
        u = [rng.randint(-spread, spread) for _ in range(k)]
        v = [rng.randint(-spread, spread) for _ in range(k)]
        gu, gv = ghost(u, p), ghost(v, p)
        gs, gp = ghost(witt_sum_int(u, v, p), p), ghost(witt_product_int(u, v, p), p)
        if gs != [a + b for a, b in zip(gu, gv)]:
            return Check(name, FAIL, params, f"ghost(u+v) != ghost(u)+ghost(v) at u={u}, v={v}",
                         {"u": u, "v": v, "op": "add"})
        if gp != [a * b for a, b in zip(gu, gv)]:
            return Check(name, FAIL, params, f"ghost(uv) != ghost(u)ghost(v) at u={u}, v={v}",
                         {"u": u, "v": v, "op": "mul"})
    return Check(name, PASS, params, f"{samples} random pairs")


# -- arithmetic over F_{p^a} --------------------------------------------------

class _Compiled:
    """A polynomial reduced mod p, as (log c, exponents) pairs for table evaluation."""

    def __init__(self, f, F):
        self.terms = []
        for e, c in sorted(f.reduce_mod(F.p).terms.items()):
            self.terms.append((F.log[c], tuple((i, k) for i, k in enumerate(e) if k)))
        self.vars = {i for _, e in self.terms for i, _ in e}

    def __call__(self, F, logs):
        # logs[i] is log of input i, or None for 0
        exp, order, add = F.exp, F.order, F.add
        acc = 0
        for lc, e in self.terms:
            s = lc
            for i, k in e:
                li = logs[i]
                if li is None:
                    break
                s += li * k
            else:
                acc = add(acc, exp[s % order])
        return acc


class WittRing:
    """W_k(F_{p^a})."""

    def __init__(self, p, k, a=1):
        self.p, self.k, self.a = p, k, a
        self.F = F = make_extension(p, a)
        self.q = F.q
        U = universal_polys(p, k)
        self.S = [_Compiled(f, F) for f in U.S]
        self.P = [_Compiled(f, F) for f in U.P]
        # coordinate n of a sum or product only involves coordinates <= n
        for n, (s, m) in enumerate(zip(self.S, self.P)):
            if any(i % k > n for i in s.vars | m.vars):
                raise AssertionError(f"universal polynomial {n} depends on a later coordinate")

    @property
    def size(self):
        return self.q**self.k

    def __repr__(self):
        return f"WittRing(p={self.p}, k={self.k}, F_{self.q})"

    def vector(self, coords):
        coords = tuple(coords)
        if len(coords) != self.k or not all(0 <= c < self.q for c in coords):
            raise ValueError(f"{coords} is not a vector of length {self.k} over F_{self.q}")
        return WittVector(self, coords)

    def zero(self):
        return WittVector(self, (0,) * self.k)

    def one(self):
        return WittVector(self, (1,) + (0,) * (self.k - 1))

    def elements(self):
        return (WittVector(self, c) for c in product(range(self.q), repeat=self.k))

    def _logs(self, u, v):
        log = self.F.log
        return [log[c] if c else None for c in u + v]

    def add_coords(self, u, v):
        logs = self._logs(u, v)
        return tuple(f(self.F, logs) for f in self.S)

    def mul_coords(self, u, v):
        logs = self._logs(u, v)
        return tuple(f(self.F, logs) for f in self.P)

    def inverse_coords(self, u):
        """Search for v with u v = 1 one coordinate at a time; None if there is none.

        Every candidate v is covered: coordinate n of u v depends only on
        v_0..v_n, so a prefix that already fails can be discarded.
        """
        k, q, F = self.k, self.q, self.F
        log = F.log
        target = (1,) + (0,) * (k - 1)
        ulogs = [log[c] if c else None for c in u]
        prefixes = [()]
        for n in range(k):
            nxt = []
            for pre in prefixes:
                for c in range(q):
                    v = pre + (c,) + (0,) * (k - n - 1)
                    logs = ulogs + [log[x] if x else None for x in v]
                    if self.P[n](F, logs) == target[n]:
                        nxt.append(pre + (c,))
            prefixes = nxt
            if not prefixes:
                return None
        if len(prefixes) != 1:
            raise ArithmeticError(f"{u} has {len(prefixes)} inverses")
        return prefixes[0]

    def units(self):
        if self.size > GROUP_BUDGET:
            raise ResourceError(f"W_{self.k}(F_{self.q}) has {self.size} elements, over budget {GROUP_BUDGET}")
        return [u for u in self.elements() if self.inverse_coords(u.coords) is not None]

    def subfield_vectors(self, s):
        """Vectors with every coordinate in the subfield F_{p^s} (fixed points of x -> x^(p^s))."""
        if self.a % s:
            raise ValueError(f"F_{self.p}^{s} is not a subfield of F_{self.q}")
        F = self.F
        sub = [x for x in range(self.q) if F.frobenius(x, s) == x]
        return [WittVector(self, c) for c in product(sub, repeat=self.k)]


@dataclass(frozen=True)
class WittVector:
    ring: WittRing
    coords: tuple

    def _same(self, other):
        if not isinstance(other, WittVector) or other.ring is not self.ring:
            raise ValueError("Witt vectors over different rings")

    def __add__(self, other):
        self._same(other)
        return WittVector(self.ring, self.ring.add_coords(self.coords, other.coords))

    def __mul__(self, other):
        self._same(other)
        return WittVector(self.ring, self.ring.mul_coords(self.coords, other.coords))

    def inverse(self):
        v = self.ring.inverse_coords(self.coords)
        if v is None:
            raise ZeroDivisionError(f"{self.coords} is not a unit")
        return WittVector(self.ring, v)

    def is_unit(self):
        return self.ring.inverse_coords(self.coords) is not None

    def __pow__(self, e):
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, WittVector) and self.ring is other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"W{self.coords}"


@lru_cache(maxsize=None)
def witt_ring(p, k, a=1):
    return WittRing(p, k, a)


def witt_add(u, v):
    return u + v


def witt_mul(u, v):
    return u * v


def unit_count_check(p, k, a=1):
    """#W_k(F_q)^x = q^(k-1)(q-1), testing every element for an inverse."""
    W = witt_ring(p, k, a)
    q = W.q
    got = len(W.units())
    expected = q ** (k - 1) * (q - 1)
    params = {"p": p, "k": k, "q": q}
    if got != expected:
        return Check("WITT_UNITS", FAIL, params, f"{got} units, expected {expected}", {"lhs": got, "rhs": expected})
    return Check("WITT_UNITS", PASS, params, f"{got} units among {W.size} vectors")


def ring_axioms_check(p, k, a=1, samples=500, seed=0):
    W = witt_ring(p, k, a)
    params = {"p": p, "k": k, "q": W.q}
    elems = list(W.elements())
    if len(elems) <= AXIOM_EXHAUSTIVE:
        triples = [(x, y, z) for x in elems for y in elems for z in elems]
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.choice(elems) for _ in range(3)) for _ in range(samples)]
        mode = f"{samples} samples, seed {seed}"
    zero, one = W.zero(), W.one()
    for x, y, z in triples:
        for law, lhs, rhs in (
            ("add commutative", x + y, y + x),
            ("mul commutative", x * y, y * x),
            ("add associative", (x + y) + z, x + (y + z)),
            ("mul associative", (x * y) * z, x * (y * z)),
            ("distributive", x * (y + z), x * y + x * z),
            ("identities", x + zero, x * one),
        ):
            if lhs != rhs:
                return Check("WITT_RING_AXIOMS", FAIL, params, f"{law} fails at {x}, {y}, {z}",
                             {"law": law, "x": x.coords, "y": y.coords, "z": z.coords})
    return Check("WITT_RING_AXIOMS", PASS, params, f"{len(triples)} triples ({mode})")


# -- quotient groups -----------------------------------------------------------

@dataclass
class QuotientGroupReport:
    p: int
    k: int
    big_field: int
    small_field: int
    big_order: int
    small_order: int
    coset_count: int
    expected: int
    subgroup_verified: bool
    cyclic_observed: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.subgroup_verified and self.coset_count * self.small_order == self.big_order \
            and self.coset_count == self.expected

    def as_dict(self):
        d = asdict(self)
        d["psi"] = d.pop("expected")
        d["passed"] = self.passed
        return d


@lru_cache(maxsize=None)
def quotient_group(p, k, big=2, small=1):
    """W_k(F_{p^big})^x / W_k(F_{p^small})^x, built by enumerating cosets."""
    W = witt_ring(p, k, big)
    units = W.units()
    unit_set = set(units)
    H = [h for h in W.subfield_vectors(small) if h.coords[0] != 0]
    notes = []
    # subgroup: closed under products and inverses, and every element a unit of W
    verified = all(h in unit_set for h in H)
    H_set = set(H)
    if verified:
        verified = all(x * y in H_set for x in H for y in H)
    if verified:
        verified = all(h.inverse() in H_set for h in H)
    if not verified:
        notes.append("embedded subgroup failed closure")
    seen = set()
    reps = []
    for u in units:
        if u in seen:
            continue
        reps.append(u)
        for h in H:
            seen.add(u * h)
    qb, qs = p**big, p**small
    expected = qb ** (k - 1) * (qb - 1) // (qs ** (k - 1) * (qs - 1))
    report = QuotientGroupReport(p, k, qb, qs, len(units), len(H), len(reps), expected, verified)
    report.cyclic_observed = _cyclic(reps, H_set, len(reps))
    if len(seen) != len(units):
        report.subgroup_verified = False
        report.notes.append("cosets do not partition the unit group")
    report.notes.extend(notes)
    return report


def _cyclic(reps, H, order):
    # look for a coset whose order in the quotient is the full group order
    for u in reps:
        x, j = u, 1
        while x not in H:
            x = x * u
            j += 1
        if j == order:
            return True
    return False


def psi_group(p, k):
    """G(p^k) = W_k(F_{p^2})^x / W_k(F_p)^x; its order should be psi(p^k) = p^(k-1)(p+1)."""
    report = quotient_group(p, k, 2, 1)
    return replace(report, expected=psi(p**k), notes=list(report.notes))


def G_n_order(n):
    """#G(n) as the product of coset counts over the prime powers dividing n."""
    total = 1
    for p, k in factorize(n):
        report = psi_group(p, k)
        if not report.passed:
            raise ArithmeticError(f"G({p}^{k}) construction failed: {report}")
        total *= report.coset_count
    return total


def psi_group_check(p, k):
    r = psi_group(p, k)
    params = {"p": p, "k": k}
    if not r.passed:
        return Check("PSI_GROUP", FAIL, params,
                     f"#G({p}^{k}) = {r.coset_count}, psi = {r.expected}, subgroup ok: {r.subgroup_verified}",
                     {"lhs": r.coset_count, "rhs": r.expected})
    cyc = "cyclic" if r.cyclic_observed else "not cyclic"
    return Check("PSI_GROUP", PASS, params, f"{r.big_order}/{r.small_order} = {r.coset_count} = psi({p**k}); "
                 f"observed {cyc}")


def G_n_check(n):
    params = {"n": n}
    try:
        got = G_n_order(n)
    except ArithmeticError as exc:
        return Check("G_N_ORDER", FAIL, params, str(exc), {"n": n})
    want = psi(n)
    if got != want:
        return Check("G_N_ORDER", FAIL, params, f"#G({n}) = {got}, psi = {want}", {"n": n, "lhs": got, "rhs": want})
    return Check("G_N_ORDER", PASS, params, f"#G({n}) = {got} = psi({n})")


# -- the variety-level group G(alpha) -------------------------------------------

READINGS = ("per_point", "literal")


def variety_G_order(q, cycle, reading="per_point", construct=True):
    """#G(alpha) for alpha = sum a_x x, given as [(deg x, a_x)] over F_q.

    ``per_point`` uses W_a(F_{q^(2 deg x)}) / W_a(F_{q^deg x}) for each point;
    ``literal`` uses deg(alpha) in place of deg x in every factor.  Factors
    small enough are built by coset enumeration, the rest use the unit count
    q^(k-1)(q-1) of W_k(F_q).
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    (p, m), = factorize(q)
    total_degree = sum(d * a for d, a in cycle)
    total = 1
    built = []
    for d, a in cycle:
        e = d if reading == "per_point" else total_degree
        big, small = 2 * m * e, m * e
        Qb, Qs = p**big, p**small
        formula = Qb ** (a - 1) * (Qb - 1) // (Qs ** (a - 1) * (Qs - 1))
        if construct and a <= MAX_LENGTH and big <= 8 and Qb**a <= GROUP_BUDGET:
            r = quotient_group(p, a, big, small)
            if r.coset_count != formula or not r.subgroup_verified:
                raise ArithmeticError(f"coset count {r.coset_count} differs from {formula}")
            built.append(True)
        else:
            built.append(False)
        total *= formula
    return total, built


def psi_X_of_cycle(q, cycle):
    out = 1
    for d, a in cycle:
        out *= (q**d + 1) * q ** (d * (a - 1))
    return out


def variety_G_check(q, cycles):
    """Per-point reading against psi_X, with the literal reading reported beside it."""
    params = {"q": q, "cycles": [list(map(list, c)) for c in cycles]}
    literal_differs = []
    for cycle in cycles:
        per_point, _ = variety_G_order(q, cycle, "per_point")
        want = psi_X_of_cycle(q, cycle)
        if per_point != want:
            return Check("VARIETY_G", FAIL, params, f"per-point #G = {per_point}, psi_X = {want} at {cycle}",
                         {"cycle": cycle, "lhs": per_point, "rhs": want})
        literal, _ = variety_G_order(q, cycle, "literal", construct=False)
        if literal != want:
            literal_differs.append({"cycle": cycle, "literal": literal, "psi_X": want})
    detail = f"per-point reading matches psi_X on {len(cycles)} cycles"
    if literal_differs:
        detail += f"; literal reading differs on {len(literal_differs)}"
    return Check("VARIETY_G", PASS, params, detail, witness={"literal_mismatches": literal_differs[:5]})
