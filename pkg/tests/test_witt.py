import pytest
from hypothesis import given, settings, strategies as st

from arithgeom import witt as W
from arithgeom.classical import ResourceError, psi
from arithgeom.poly import IntPoly
from arithgeom.report import PASS


def test_ghost_examples():
    assert W.ghost([5], 3) == [5]
    assert W.ghost([3, 4], 2) == [3, 3 * 3 + 2 * 4]
    # w_2 = 1^4 + 2 * 1^2 + 4 * 1
    assert W.ghost([1, 1, 1], 2) == [1, 3, 7]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_universal_polys_low_degree(p):
    U = W.universal_polys(p, 2)
    X0, X1, Y0, Y1 = (IntPoly.var(4, i) for i in range(4))
    assert U.S[0] == X0 + Y0 and U.P[0] == X0 * Y0
    assert U.P[1] == X0**p * Y1 + X1 * Y0**p + p * X1 * Y1
    if p == 2:
        assert U.S[1] == X1 + Y1 - X0 * Y0


def test_length_cap():
    with pytest.raises(ResourceError):
        W.universal_polys(2, W.MAX_LENGTH + 1)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 3),
       st.lists(st.integers(-50, 50), min_size=6, max_size=6))
def test_ghost_is_a_ring_map(p, k, vals):
    u, v = vals[:k], vals[3:3 + k]
    gu, gv = W.ghost(u, p), W.ghost(v, p)
    assert W.ghost(W.witt_sum_int(u, v, p), p) == [a + b for a, b in zip(gu, gv)]
    assert W.ghost(W.witt_product_int(u, v, p), p) == [a * b for a, b in zip(gu, gv)]


def test_add_mul_examples():
    R = W.witt_ring(2, 2)
    one, zero = R.one(), R.zero()
    assert one + one == R.vector((0, 1))
    u = R.vector((1, 1))
    assert u * u == one and u != one
    for x in R.elements():
        assert x + zero == x and x * one == x


def test_mismatched_rings():
    with pytest.raises(ValueError):
        W.witt_add(W.witt_ring(2, 2).one(), W.witt_ring(3, 2).one())
    with pytest.raises(ValueError):
        W.witt_ring(2, 2).vector((0, 2))


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_prime_field_witt_ring_is_z_mod_pk(p, k):
    # n -> n * 1 must be a ring isomorphism Z/p^k -> W_k(F_p)
    R = W.witt_ring(p, k)
    image = [R.zero()]
    for _ in range(p**k - 1):
        image.append(image[-1] + R.one())
    assert len(set(image)) == p**k
    assert image[-1] + R.one() == R.zero()
    for a in range(0, p**k, max(1, p**k // 9)):
        for b in range(p**k):
            assert image[a] * image[b] == image[a * b % p**k]


@pytest.mark.parametrize("p,k,a", [(2, 2, 1), (2, 2, 2), (3, 2, 1), (2, 3, 2), (5, 1, 2)])
def test_unit_counts(p, k, a):
    assert W.unit_count_check(p, k, a).status == PASS
    q = p**a
    assert len(W.witt_ring(p, k, a).units()) == q ** (k - 1) * (q - 1)


def test_inverse_and_powers():
    R = W.witt_ring(3, 2, 2)
    for u in R.units()[:30]:
        assert u * u.inverse() == R.one()
        assert u ** len(R.units()) == R.one()
    with pytest.raises(ZeroDivisionError):
        R.vector((0, 1)).inverse()


@pytest.mark.parametrize("p,k,a", [(2, 2, 2), (3, 2, 1), (2, 3, 2), (3, 2, 2)])
def test_ring_axioms(p, k, a):
    assert W.ring_axioms_check(p, k, a).status == PASS


@pytest.mark.parametrize("p,k,order", [(2, 1, 3), (2, 2, 6), (3, 2, 12), (2, 3, 12), (3, 1, 4)])
def test_psi_group_examples(p, k, order):
    r = W.psi_group(p, k)
    assert r.coset_count == order == psi(p**k)
    assert r.passed and r.subgroup_verified
    d = r.as_dict()
    assert d["psi"] == order and d["passed"]


def test_psi_group_small_orders():
    r = W.psi_group(2, 2)
    assert (r.big_order, r.small_order) == (12, 2)


@pytest.mark.parametrize("n,order", [(1, 1), (12, 24), (18, 36)])
def test_G_n_examples(n, order):
    assert W.G_n_order(n) == order
    assert W.G_n_check(n).status == PASS


def test_G_n_budget():
    with pytest.raises(ResourceError):
        W.G_n_order(13**2)


def test_variety_G():
    assert W.variety_G_order(2, [(1, 1)])[0] == W.psi_X_of_cycle(2, [(1, 1)]) == 3
    assert W.variety_G_order(2, [(1, 2), (2, 1)])[0] == W.psi_X_of_cycle(2, [(1, 2), (2, 1)])
    c = W.variety_G_check(2, [[(1, 1)], [(1, 1), (2, 1)]])
    assert c.status == PASS
    # deg(alpha) = 3 in every factor under the literal reading
    assert c.witness["literal_mismatches"][0]["cycle"] == [(1, 1), (2, 1)]
