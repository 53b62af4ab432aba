"""Sparse multivariate polynomials with integer coefficients."""

DEFAULT_NAMES = ("x", "y", "z", "w")


class IntPoly:
    """Polynomial in ``nvars`` variables stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different numbers of variables")
            return other
        return IntPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, IntPoly):
            return IntPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d):
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} of monomial {e} is not divisible by {d}")
            out[e] = q
        return IntPoly(self.nvars, out)

    def reduce_mod(self, p):
        return IntPoly(self.nvars, {e: c % p for e, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def homogeneity_violation(self):
        """First monomial (in sorted order) whose degree differs from the leading one."""
        if not self.terms:
            return None
        exps = sorted(self.terms, reverse=True)
        deg = sum(exps[0])
        for e in exps:
            if sum(e) != deg:
                return e
        return None

    def is_homogeneous(self):
        return self.homogeneity_violation() is None

    def variables(self):
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def evaluate(self, values):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v *= x**k
            total += v
        return total

    def extend(self, nvars):
        """Same polynomial viewed in more variables (appended at the end)."""
        pad = (0,) * (nvars - self.nvars)
        return IntPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == IntPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def format(self, names=None):
        if names is None:
            names = DEFAULT_NAMES if self.nvars <= len(DEFAULT_NAMES) else [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def monomial_str(self, e, names=None):
        return IntPoly(self.nvars, {e: 1}).format(names)

    def __repr__(self):
        return f"IntPoly({self.format()})"
