import pytest

from arithgeom import classical as C
from arithgeom import globalzeta as G
from arithgeom.report import PASS
from arithgeom.varzeta.variety import hypersurface


def model(name, nmax):
    return G.GlobalModel(G.template(name), nmax)


def test_local_series_examples():
    M = model("point", 100)
    for p in (2, 3, 5, 7):
        D = G.local_degree(p, 100)
        assert list(G.local_series(M, p, "zeta")) == [1] * (D + 1)
        assert list(G.local_series(M, p, "phi")) == [1] + [p**k - p ** (k - 1) for k in range(1, D + 1)]
    assert list(G.local_series(model("P1", 64), 2, "zeta")) == [1, 3, 7, 15, 31, 63, 127]


def test_local_degree():
    assert G.local_degree(2, 60) == 5
    assert G.local_degree(7, 60) == 2
    assert G.local_degree(61, 60) == 0


def test_point_template_is_spec_z():
    M = model("point", 200)
    ns = range(1, 201)
    assert G.global_dirichlet(M, "zeta").coeffs == [1] * 200
    assert G.global_dirichlet(M, "phi").coeffs == [C.phi(n) for n in ns]
    assert G.global_dirichlet(M, "sigma1").coeffs == [C.sigma1(n) for n in ns]
    assert G.global_dirichlet(M, "psi").coeffs == [C.psi(n) for n in ns]
    assert G.global_dirichlet(M, "lambda").coeffs == [C.liouville(n) for n in ns]


def test_p1_template_zeta_is_sigma1():
    assert G.global_dirichlet(model("P1", 100), "zeta").coeffs == [C.sigma1(n) for n in range(1, 101)]


def test_unknown_function():
    with pytest.raises(KeyError):
        G.global_dirichlet(model("point", 10), "tau")
    with pytest.raises(KeyError):
        G.verify_global_identity("GLOBAL_TAU", model("point", 10))


@pytest.mark.parametrize("name", ["point", "P1", "Gm", "A1"])
@pytest.mark.parametrize("identity", G.GLOBAL_IDENTITIES)
def test_global_identities(name, identity):
    c = G.verify_global_identity(identity, model(name, 60))
    assert c.status == PASS and c.params["skipped_primes"] == []


def test_cubic_template():
    M = model("cubic", 30)
    for identity in G.GLOBAL_IDENTITIES:
        assert G.verify_global_identity(identity, M).status == PASS


def test_discrepancy_witness():
    c = G.verify_global_identity("EULER_FACTOR_DISCREPANCY", model("point", 60))
    assert c.status == PASS
    assert c.witness == {"n": 4, "literal_product": 1, "phi": 2, "zeta_quotient_holds": True}


def test_skipped_primes_are_reported():
    budget = 500
    M = G.GlobalModel(hypersurface("affine", 3, ["x*y*z - 1"]), 30, budget=budget)
    # the fibre method enumerates q^2 prefixes at the top extension degree
    want = [p for p in M.primes() if (p ** G.local_degree(p, 30)) ** 2 > budget]
    assert want
    z = G.global_dirichlet(M, "zeta")
    assert z.skipped == want
    for n in range(1, 31):
        involved = any(n % p == 0 for p in want)
        assert (z[n] is None) == involved
    for identity in G.GLOBAL_IDENTITIES[:4]:
        c = G.verify_global_identity(identity, M)
        assert c.status == PASS and c.params["skipped_primes"] == want
        assert "skipped primes" in c.detail
