"""Acceptance criteria, each run at full size with exact comparison.

Every criterion records one line, printed at the end of the pytest run (see
conftest.py) or directly when this file is run as a script.
"""

import time

import pytest

from arithgeom import classical as C
from arithgeom import globalzeta as G
from arithgeom import quadfield as Q
from arithgeom import suites, witt
from arithgeom.report import FAIL, PASS, Check
from arithgeom.varzeta import wardlaw, zeta

RESULTS = []


def criterion(number, title, limit):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            checks = list(fn())
            elapsed = time.perf_counter() - start
            failed = [c for c in checks if c.status != PASS]
            ok = not failed and elapsed < limit
            why = "; ".join(f"{c.name} {c.params}: {c.detail}" for c in failed[:3])
            if elapsed >= limit:
                why = (why + "; " if why else "") + f"runtime {elapsed:.1f}s over {limit}s"
            line = f"criterion {number} {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s) {title}"
            RESULTS.append(line + (f" -- {why}" if why else ""))
            assert ok, why
        run.__name__ = f"test_criterion_{number}"
        return run
    return wrap


@criterion(1, "classical identities to 500, sigma_1 = #P^1(Z/n) to 60", 10)
def _c1():
    for name in ("PHI_RECURSION", "PHI_MU", "SIGMA_SERIES", "PSI_ABSMU", "LAMBDA_ABSMU_DELTA",
                 "LAMBDA_SQUARE", "LAMBDA_MU_SQFREE_PART", "R2_CHI"):
        yield C.verify_classical_identity(name, 500)
    yield C.verify_classical_identity("SIGMA_P1_COUNT", 60)


@criterion(2, "Euler's theorem mod n, n <= 300", 5)
def _c2():
    yield C.euler_check(300)


@criterion(3, "SL_2 index = psi for n <= 24 and N(a) <= 16 in Q(i), Q(sqrt 5)", 60)
def _c3():
    yield C.sl2_check(24)
    for d in (-1, 5):
        yield Q.verify_quadfield_identity("PSIK_SL2", Q.QuadraticField(d), 16)


@criterion(4, "quadratic fields d in {-1, 5, -5, 2}: oracles to norm 100, identities to 200", 120)
def _c4():
    for d in (-1, 5, -5, 2):
        K = Q.QuadraticField(d)
        yield Q.verify_quadfield_identity("PHIK_ORACLE", K, 100)
        yield Q.verify_quadfield_identity("SIGMAK_ORACLE", K, 100)
        for name in Q.QUADFIELD_IDENTITIES:
            yield Q.verify_quadfield_identity(name, K, 200)


@criterion(5, "varieties P1/F2, Gm/F3, A2/F2, cubic/F3 to degree 8", 120)
def _c5():
    for V in suites.sample_varieties():
        yield from zeta.verify_variety(V, 8)


@criterion(6, "Euler's theorem in F_q[t]/(g), q in {2, 3}, deg g <= 3", 30)
def _c6():
    for q in (2, 3):
        yield wardlaw.euler_check_wardlaw(q, 3)


@criterion(7, "global series: point template to 200, templates point/P1/Gm/A1 at 60", 180)
def _c7():
    M = G.GlobalModel(G.template("point"), 200)
    ns = range(1, 201)
    for fn, f in (("phi", C.phi), ("sigma1", C.sigma1), ("psi", C.psi)):
        got = G.global_dirichlet(M, fn).coeffs
        want = [f(n) for n in ns]
        bad = next((n for n in ns if got[n - 1] != want[n - 1]), None)
        yield Check(f"POINT_TEMPLATE_{fn.upper()}", PASS if bad is None else FAIL, {"nmax": 200},
                           "200 coefficients agree" if bad is None else f"mismatch at n={bad}")
    for name in suites.GLOBAL_TEMPLATES:
        M = G.GlobalModel(G.template(name), 60)
        for identity in ("GLOBAL_PHI", "GLOBAL_SIGMA", "GLOBAL_PSI"):
            yield G.verify_global_identity(identity, M)


@criterion(8, "Witt vectors: ghost map, unit counts, #G(p^k) and #G(n) = psi", 120)
def _c8():
    for p in (2, 3, 5):
        for k in range(1, 5):
            yield witt.ghost_homomorphism_check(p, k, samples=200)
    for p, k, a in suites.WITT_RINGS:
        yield witt.unit_count_check(p, k, a)
    for p, k in suites.WITT_PAIRS:
        yield witt.psi_group_check(p, k)
    for n in suites.WITT_G_N:
        yield witt.G_n_check(n)


@criterion(9, "literal Euler factor disagrees with phi(4) while the zeta quotient holds", 60)
def _c9():
    c = G.verify_global_identity("EULER_FACTOR_DISCREPANCY", G.GlobalModel(G.template("point"), 60))
    want = {"n": 4, "literal_product": 1, "phi": 2, "zeta_quotient_holds": True}
    if c.status == PASS and c.witness != want:
        c = Check(c.name, FAIL, c.params, f"witness {c.witness} != {want}")
    yield c


CRITERIA = [_c1, _c2, _c3, _c4, _c5, _c6, _c7, _c8, _c9]
for _c in CRITERIA:
    globals()[_c.__name__] = pytest.mark.acceptance(_c)


if __name__ == "__main__":
    for c in CRITERIA:
        try:
            c()
        except AssertionError:
            pass
    print("\n".join(RESULTS))
