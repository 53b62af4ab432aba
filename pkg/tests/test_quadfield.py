import math

import pytest
from hypothesis import given, settings, strategies as st

from arithgeom import quadfield as Q
from arithgeom.classical import ResourceError, factorize
from arithgeom.report import FAIL, PASS


@pytest.fixture(scope="module")
def gauss():
    return Q.QuadraticField(-1)


def rational_ideal(K, n):
    """The principal ideal (n) as a monoid element."""
    factors = []
    for p, k in factorize(n):
        atoms = K.split_prime(p)
        e = 2 * k if atoms[0].kind == Q.RAMIFIED else k
        factors += [(p, i, e) for i in range(len(atoms))]
    return K.ideal(*factors)


def test_splitting_examples(gauss):
    five = gauss.split_prime(5)
    assert [a.kind for a in five] == [Q.SPLIT, Q.SPLIT] and [a.norm for a in five] == [5, 5]
    three = gauss.split_prime(3)
    assert [(a.kind, a.norm) for a in three] == [(Q.INERT, 9)]
    assert gauss.split_prime(2)[0].kind == Q.RAMIFIED
    with pytest.raises(ValueError):
        gauss.split_prime(4)


@pytest.mark.parametrize("d", [-1, 5, -5, 2, -3, 3])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_splitting_consistent_with_ideal_counts(d, p):
    assert Q.check_splitting(Q.QuadraticField(d), p)


def test_enumeration_examples(gauss):
    ideals = Q.enumerate_ideals(gauss, 10)
    by_norm = {}
    for a, n in ideals:
        by_norm.setdefault(n, []).append(a)
    assert by_norm[1] == [gauss.ideal()]
    assert len(by_norm[5]) == 2
    assert len(by_norm[9]) == 1 and 3 not in by_norm


def test_quotient_ring_examples(gauss):
    R = Q.quotient_ring(gauss, gauss.ideal(gauss.split_prime(5)[0]))
    assert (R.order, R.unit_count(), R.p1_count()) == (5, 4, 6)
    R2 = Q.quotient_ring(gauss, gauss.ideal((2, 0, 2)))
    assert (R2.order, R2.unit_count()) == (4, 2)
    R1 = Q.quotient_ring(gauss, gauss.ideal())
    assert R1.unit_count() == 1 and Q.phi_K(gauss, gauss.ideal()) == 1
    assert R1.check_axioms()


def test_quotient_ring_cap(gauss):
    with pytest.raises(ResourceError):
        Q.quotient_ring(gauss, rational_ideal(gauss, 21))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12))
def test_gaussian_units_against_coordinates(n):
    # Z[i]/(n) is (Z/n)^2; x + yi is a unit iff x^2 + y^2 is prime to n
    K = Q.QuadraticField(-1)
    a = rational_ideal(K, n)
    expected = sum(1 for x in range(n) for y in range(n) if math.gcd(x * x + y * y, n) == 1)
    assert K.norm(a) == n * n
    assert Q.phi_K(K, a) == expected
    if n * n <= Q.ORACLE_CAP:
        assert Q.quotient_ring(K, a).unit_count() == expected


def test_pushforward_examples(gauss):
    z = Q.dirichlet_pushforward(gauss, "zeta", 10)
    assert z[5] == 2
    assert list(Q.dirichlet_pushforward(gauss, "delta", 5)) == [1, 0, 0, 0, 0]
    assert Q.dirichlet_pushforward(gauss, "phi", 4)[2] == 1


def test_sl2_examples(gauss):
    assert Q.sl2_index_K(gauss, gauss.ideal()) == 1
    assert Q.sl2_index_K(gauss, gauss.ideal((2, 0, 1))) == 3
    assert Q.sl2_index_K(gauss, gauss.ideal((3, 0, 1))) == 10


@pytest.mark.parametrize("d", [-1, 5, -5, 2])
@pytest.mark.parametrize("name", Q.QUADFIELD_IDENTITIES)
def test_dirichlet_identities(d, name):
    assert Q.verify_quadfield_identity(name, Q.QuadraticField(d), 200).status == PASS


@pytest.mark.parametrize("d", [-1, 5, -5, 2])
def test_oracles(d):
    K = Q.QuadraticField(d)
    for name in ("PHIK_ORACLE", "PSIK_P1_ORACLE"):
        assert Q.verify_quadfield_identity(name, K, 100).status == PASS
    assert Q.euler_check_K(K, 60).status == PASS


@pytest.mark.parametrize("d", [-1, 5])
def test_sl2_identity(d):
    assert Q.verify_quadfield_identity("PSIK_SL2", Q.QuadraticField(d), 16).status == PASS


def test_sigma_oracle_fails_at_norm_four(gauss):
    # #P^1(Z[i]/(2)) is 6 by enumeration, sigma_{1,K}((2)) = 1 + 2 + 4
    c = Q.verify_quadfield_identity("SIGMAK_ORACLE", gauss, 100)
    assert c.status == FAIL
    assert (c.counterexample["norm"], c.counterexample["lhs"], c.counterexample["rhs"]) == (4, 7, 6)


def test_unknown_identity(gauss):
    with pytest.raises(KeyError):
        Q.verify_quadfield_identity("NOPE", gauss, 10)
    with pytest.raises(ValueError):
        Q.QuadraticField(4)
