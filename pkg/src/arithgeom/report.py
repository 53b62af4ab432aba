"""Pass/fail records shared by every verifier."""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Check:
    """Outcome of one identity check.

    ``counterexample`` holds the smallest failing index (n, norm or degree)
    together with both sides of the identity when ``status`` is ``fail``.
    ``witness`` carries evidence a passing check is required to exhibit.
    """

    name: str
    status: str
    params: dict = field(default_factory=dict)
    detail: str = ""
    counterexample: dict | None = None
    witness: dict | None = None

    @property
    def passed(self):
        return self.status == PASS

    def __bool__(self):
        return self.status != FAIL

    def as_dict(self):
        out = {"id": self.name, "params": _jsonable(self.params), "status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


def _jsonable(obj):
    # big integers and fractions become decimal strings so nothing is lossy
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < 2**53 else str(obj)
    if isinstance(obj, float):
        return obj
    return str(obj)


def compare(name, lhs, rhs, indices, params=None, label="n"):
    """Compare two callables on ``indices`` in order; report the first mismatch."""
    count = 0
    for i in indices:
        a, b = lhs(i), rhs(i)
        count += 1
        if a != b:
            return Check(name, FAIL, params or {}, f"mismatch at {label}={i}: {a} != {b}",
                         {label: i, "lhs": a, "rhs": b})
    return Check(name, PASS, params or {}, f"{count} values agree")


def compare_series(name, lhs, rhs, params=None, label="n"):
    """Coefficientwise comparison of two Dirichlet or power series."""
    i = lhs.first_mismatch(rhs)
    if i is None:
        return Check(name, PASS, params or {}, f"{min(len(lhs.coeffs), len(rhs.coeffs))} coefficients agree")
    return Check(name, FAIL, params or {}, f"coefficient mismatch at {label}={i}: {lhs[i]} != {rhs[i]}",
                 {label: i, "lhs": lhs[i], "rhs": rhs[i]})


def merge(name, checks, params=None):
    """Fold sub-checks into one; the first failure wins."""
    checks = list(checks)
    for c in checks:
        if c.status == FAIL:
            return Check(name, FAIL, params or {}, f"{c.name}: {c.detail}", c.counterexample)
    if checks and all(c.status == SKIP for c in checks):
        return Check(name, SKIP, params or {}, "; ".join(c.detail for c in checks))
    return Check(name, PASS, params or {}, "; ".join(f"{c.name}: {c.detail}" for c in checks))
