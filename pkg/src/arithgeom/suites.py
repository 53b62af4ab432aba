"""Verification suites: ordered lists of checks with their default bounds."""

from dataclasses import dataclass, field

from . import classical, globalzeta, quadfield, witt
from .report import FAIL, PASS, SKIP, Check
from .varzeta import variety, wardlaw, zeta

SUITES = ("classical", "quadfield", "variety", "global", "witt")

DEFAULT_FIELDS = (-1, 5, -5, 2)
SL2_FIELDS = (-1, 5)
EULER_BOUND = 300
QUAD_ORACLE_NORM = 100
QUAD_EULER_NORM = 60
GLOBAL_TEMPLATES = ("point", "P1", "Gm", "A1")
CUBIC_NMAX = 30
WITT_PAIRS = ((2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3))
WITT_G_N = (12, 18, 45, 100)
# (p, k, a) for the unit-count and ring-axiom checks of W_k(F_{p^a})
WITT_RINGS = ((2, 1, 1), (2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 2, 2), (2, 3, 2), (3, 2, 1), (3, 3, 1),
              (3, 2, 2), (5, 2, 1), (5, 1, 2))
VARIETY_G_CYCLES = ([(1, 1)], [(2, 1)], [(1, 2)], [(1, 1), (2, 1)], [(1, 2), (1, 1)], [(2, 2)], [(1, 3)])

LIMIT_CAP = 10000
NORM_CAP = quadfield.ORACLE_CAP
DEGREE_CAP = 8
NMAX_CAP = 1000


@dataclass
class RunConfig:
    limit: int = 500
    fields: tuple = DEFAULT_FIELDS
    norm: int = 200
    oracle_norm: int = QUAD_ORACLE_NORM
    degree: int | None = None
    varieties: list = field(default_factory=list)  # VarietySpec; empty means the sample set
    templates: list = field(default_factory=list)  # VarietySpec with p=None; empty means the samples
    nmax: int = 60
    seed: int = 0
    witt_pairs: tuple = WITT_PAIRS
    witt_n: tuple = WITT_G_N
    ghost_pairs: tuple | None = None

    def validate(self):
        if not 1 <= self.limit <= LIMIT_CAP:
            raise ValueError(f"--limit must be in 1..{LIMIT_CAP}")
        if not 1 <= self.norm <= NORM_CAP:
            raise ValueError(f"--norm must be in 1..{NORM_CAP}")
        if self.degree is not None and not 1 <= self.degree <= DEGREE_CAP:
            raise ValueError(f"--degree must be in 1..{DEGREE_CAP}")
        if not 1 <= self.nmax <= NMAX_CAP:
            raise ValueError(f"--nmax must be in 1..{NMAX_CAP}")
        for d in self.fields:
            quadfield.QuadraticField(d)
        for V in self.varieties:
            if V.p is None:
                raise ValueError("variety suite needs a base prime (p=...)")
        return self


def sample_varieties():
    return [variety.builtin("P1", 2), variety.builtin("Gm", 3), variety.builtin("A2", 2), variety.cubic_curve(3)]


def _guard(name, params, fn):
    # resource limits become skips; they never hide a failure
    try:
        return fn()
    except classical.ResourceError as exc:
        return Check(name, SKIP, params, f"skipped: {exc}")


def classical_checks(cfg):
    for name in classical.CLASSICAL_IDENTITIES:
        yield classical.verify_classical_identity(name, cfg.limit)
    yield classical.euler_check(max(2, min(cfg.limit, EULER_BOUND)))
    yield classical.sl2_check(min(cfg.limit, classical.SL2_CAP))


def quadfield_checks(cfg):
    for d in cfg.fields:
        K = quadfield.QuadraticField(d)
        for name in quadfield.QUADFIELD_IDENTITIES:
            yield verify_quadfield_identity_guarded(name, K, cfg.norm)
        oracle_norm = min(cfg.norm, cfg.oracle_norm)
        for name in quadfield.QUADFIELD_ORACLES:
            if name == "PSIK_SL2" and d not in SL2_FIELDS:
                continue
            yield verify_quadfield_identity_guarded(name, K, oracle_norm)
        yield quadfield.euler_check_K(K, min(cfg.norm, QUAD_EULER_NORM))
        yield ring_axioms_K(K, min(cfg.norm, 50), cfg.seed)


def verify_quadfield_identity_guarded(name, K, bound):
    return _guard(name, {"d": K.d, "bound": bound}, lambda: quadfield.verify_quadfield_identity(name, K, bound))


def ring_axioms_K(K, norm_bound, seed):
    params = {"d": K.d, "bound": norm_bound, "seed": seed}
    for a, n in quadfield.enumerate_ideals(K, norm_bound):
        R = quadfield.QuotientRing(K, a)
        if not R.check_axioms(samples=50, seed=seed):
            return Check("QUOTIENT_RING_AXIOMS", FAIL, params, f"ring axioms fail in O_K/{a!r}",
                         {"norm": n, "ideal": repr(a)})
    return Check("QUOTIENT_RING_AXIOMS", PASS, params, "sampled ring axioms hold in every quotient")


def variety_checks(cfg):
    vs = cfg.varieties or sample_varieties()
    for V in vs:
        D = cfg.degree or zeta.default_degree(V.p)
        try:
            data = zeta.VarietyData(V, D)
        except classical.ResourceError as exc:
            yield Check("VARIETY", SKIP, {"variety": V.label(), "D": D}, f"skipped: {exc}")
            continue
        for name in zeta.VARIETY_IDENTITIES:
            yield _guard(name, {"variety": V.label(), "D": D},
                         lambda: zeta.verify_variety_identity(name, V, data=data))
    if not cfg.varieties:
        for q in (2, 3):
            yield wardlaw.euler_check_wardlaw(q, 3)


def global_checks(cfg):
    if cfg.templates:
        models = [globalzeta.GlobalModel(T, cfg.nmax) for T in cfg.templates]
    else:
        models = [globalzeta.GlobalModel(globalzeta.template(t), cfg.nmax) for t in GLOBAL_TEMPLATES]
        models.append(globalzeta.GlobalModel(globalzeta.template("cubic"), min(cfg.nmax, CUBIC_NMAX)))
    for M in models:
        for name in globalzeta.GLOBAL_IDENTITIES:
            yield globalzeta.verify_global_identity(name, M)


def witt_checks(cfg):
    ghost_pairs = cfg.ghost_pairs or cfg.witt_pairs
    for p, k in ghost_pairs:
        yield witt.ghost_homomorphism_check(p, k, seed=cfg.seed)
    for p, k, a in WITT_RINGS:
        yield witt.unit_count_check(p, k, a)
        yield witt.ring_axioms_check(p, k, a, seed=cfg.seed)
    for p, k in cfg.witt_pairs:
        yield _guard("PSI_GROUP", {"p": p, "k": k}, lambda: witt.psi_group_check(p, k))
    for n in cfg.witt_n:
        yield _guard("G_N_ORDER", {"n": n}, lambda: witt.G_n_check(n))
    yield witt.variety_G_check(2, VARIETY_G_CYCLES)


SUITE_RUNNERS = {
    "classical": classical_checks,
    "quadfield": quadfield_checks,
    "variety": variety_checks,
    "global": global_checks,
    "witt": witt_checks,
}


def run_suite(name, cfg):
    return list(SUITE_RUNNERS[name](cfg))
