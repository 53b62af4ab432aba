import itertools

import pytest
from hypothesis import given, settings, strategies as st

from arithgeom.classical import ResourceError
from arithgeom.poly import IntPoly
from arithgeom.report import PASS
from arithgeom.varzeta import ffield, wardlaw
from arithgeom.varzeta.parse import ParseError, parse_polynomial
from arithgeom.varzeta.variety import (
    PROJECTIVE, builtin, count_points, count_sequence, cubic_curve, hypersurface, parse_variety_spec,
    rational_points,
)
from arithgeom.varzeta.zeta import (
    VARIETY_IDENTITIES, ClosedPointSpectrum, CycleMonoid, InvalidCountsError, cycle_series,
    direct_cycle_series, frobenius_orbit_count, spectrum, verify_variety_identity, zeta_series,
)

CUBIC_TEXT = "p=3\nambient=projective\ndim=2\npoly=y^2*z - x^3 + x*z^2"


# -- finite fields -------------------------------------------------------------

def test_moduli():
    assert ffield.make_extension(2, 1).q == 2
    assert ffield.make_extension(2, 2).modulus == [1, 1, 1]
    assert ffield.make_extension(3, 2).modulus == [1, 0, 1]
    assert ffield.make_extension(2, 3).modulus == [1, 1, 0, 1]


def test_extension_limits():
    with pytest.raises(ValueError):
        ffield.ExtensionField(4, 1)
    with pytest.raises(ResourceError):
        ffield.ExtensionField(2, ffield.MAX_DEGREE + 1)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)])
def test_field_axioms(p, m):
    F = ffield.make_extension(p, m)
    els = list(F.elements())
    for x, y in itertools.product(els, els):
        assert F.add(x, y) == F.add(y, x) and F.mul(x, y) == F.mul(y, x)
        assert F.add(F.sub(x, y), y) == x
    for x in els[1:]:
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, F.q) == x
    sample = els[:7]
    for x, y, z in itertools.product(sample, sample, sample):
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (2, 3)])
def test_count_roots_against_evaluation(p, m):
    F = ffield.make_extension(p, m)
    for g in itertools.product(range(p), repeat=3):
        g = list(g) + [1]
        roots = 0
        for x in F.elements():
            v = 0
            for c in reversed(g):
                v = F.add(F.mul(v, x), F.from_int(c))
            roots += v == 0
        assert ffield.count_roots(F, g) == roots


# -- parsing -----------------------------------------------------------------

def test_spec_examples():
    V = parse_variety_spec("builtin=P1\np=2")
    assert (V.ambient, V.dim, V.p) == (PROJECTIVE, 1, 2)
    C = parse_variety_spec(CUBIC_TEXT)
    assert C.polys == cubic_curve(3).polys and C.p == 3
    with pytest.raises(ParseError) as err:
        parse_variety_spec("ambient=projective\ndim=2\npoly=x^2+y")
    assert "monomial y" in str(err.value) and err.value.line == 3


@pytest.mark.parametrize("text,line", [
    ("p=4\nbuiltin=P1", 1),
    ("p=2\nbuiltin=P1\ncolour=red", 3),
    ("p=2\np=3\nbuiltin=P1", 2),
    ("global\np=2\nbuiltin=P1", 2),
    ("builtin=P1\ntimes=A2", 2),
    ("ambient=affine\ndim=2\npoly=x+$", 3),
    ("ambient=affine\ndim=12", 2),
    ("ambient=torus\ndim=1", 1),
    ("builtin=P7", 1),
])
def test_spec_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_variety_spec(text)
    assert err.value.line == line


def test_spec_global_and_times():
    V = parse_variety_spec("global\nbuiltin=Gm\ntimes=A1")
    assert V.p is None and V.times_a1 == 1


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                       st.integers(-9, 9).filter(bool), max_size=5))
def test_polynomial_format_round_trip(terms):
    f = IntPoly(3, terms)
    assert parse_polynomial(f.format(), 3) == f


def test_polynomial_aliases():
    assert parse_polynomial("x*y - 1", 2) == parse_polynomial("x0*x1 - 1", 2)


# -- point counts --------------------------------------------------------------

def naive_prime_count(V):
    """Rational points over F_p by direct evaluation of the integer equations."""
    p, n = V.p, V.ncoords
    pts = 0
    for x in itertools.product(range(p), repeat=n):
        if V.ambient == PROJECTIVE and not any(x):
            continue
        pts += all(f.evaluate(x) % p == 0 for f in V.polys)
    return pts // (p - 1) if V.ambient == PROJECTIVE else pts


def test_count_examples():
    assert count_points(builtin("A2", 3), 1) == 9
    assert count_sequence(builtin("P1", 2), 4) == [3, 5, 9, 17]
    assert count_points(cubic_curve(3), 1) == 4
    assert count_sequence(cubic_curve(3), 8) == [4, 16, 28, 64, 244, 784, 2188, 6400]
    assert count_sequence(builtin("Gm", 3), 3) == [2, 8, 26]


@pytest.mark.parametrize("text", [
    CUBIC_TEXT,
    "p=5\nambient=affine\ndim=2\npoly=y^2 - x^3 - 1",
    "p=3\nambient=projective\ndim=2\npoly=x^2 + y^2 - z^2",
    "p=2\nambient=affine\ndim=3\npoly=x*y + z\npoly=x + y + 1",
    "p=7\nambient=projective\ndim=1\npoly=x^3 - y^3",
])
def test_counts_against_evaluation(text):
    V = parse_variety_spec(text)
    assert count_points(V, 1) == naive_prime_count(V)
    assert count_sequence(V, 2) == count_sequence(V, 2, method="naive")


def test_rational_points_projective():
    pts = rational_points(builtin("P1", 2), 1)
    assert len(pts) == 3


def test_budget():
    V = hypersurface("affine", 3, ["x*y*z - 1"], p=5)
    with pytest.raises(ResourceError):
        count_points(V, 4, method="naive", budget=1000)


# -- spectra and series ------------------------------------------------------

def test_spectrum_examples():
    assert spectrum([1, 1, 1, 1], 7).b == (1, 0, 0, 0)
    assert spectrum([3, 5, 9, 17], 2).b == (3, 1, 2, 3)
    assert spectrum([1, 3, 7], 2).b == (1, 1, 2)
    with pytest.raises(InvalidCountsError):
        spectrum([3, 6], 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=7))
def test_spectrum_round_trip(b):
    s = ClosedPointSpectrum(3, tuple(b))
    assert spectrum(s.counts(), 3) == s


def test_zeta_examples():
    assert list(zeta_series(spectrum([1] * 5, 3), 4)) == [1, 1, 1, 1, 1]
    assert list(zeta_series(spectrum([3, 5, 9, 17, 33], 2), 4)) == [1, 3, 7, 15, 31]
    assert list(zeta_series(spectrum([1, 3, 7], 2), 3)) == [1, 1, 2, 4]


def test_cycle_series_examples():
    s = spectrum([3, 5, 9, 17], 2)
    for fn in ("zeta", "phi", "sigma1", "psi", "lambda"):
        assert cycle_series(fn, s, 4)[0] == 1
    assert cycle_series("phi", s, 4)[1] == 3
    assert cycle_series("psi", s, 4)[1] == 9
    assert list(cycle_series("phi", s, 4)) == [1, 3, 12, 48, 192]
    with pytest.raises(KeyError):
        cycle_series("tau", s, 4)


@pytest.mark.parametrize("fn", ["zeta", "phi", "sigma1", "psi", "lambda"])
def test_local_factors_against_direct_sum(fn):
    s = spectrum(count_sequence(builtin("P1", 3), 4), 3)
    assert list(direct_cycle_series(fn, s, 4)) == list(cycle_series(fn, s, 4))


def test_phi_x_multiplicative():
    M = CycleMonoid(spectrum([3, 5, 9, 17], 2))
    elements = M.monoid.elements_upto(4)
    for a in elements:
        for b in elements:
            if a.coprime(b) and M.monoid.weight(a * b) <= 4:
                assert M.phi(a * b) == M.phi(a) * M.phi(b)


def test_frobenius_examples():
    assert frobenius_orbit_count(builtin("P1", 2), 2) == 1
    assert frobenius_orbit_count(builtin("point", 5), 1) == 1
    assert frobenius_orbit_count(builtin("Gm", 2), 3) == 2


@pytest.mark.parametrize("V", [builtin("P1", 2), builtin("Gm", 3), builtin("point", 5), builtin("Gm", 2)],
                         ids=lambda V: V.label())
@pytest.mark.parametrize("name", VARIETY_IDENTITIES)
def test_variety_identities(V, name):
    assert verify_variety_identity(name, V, 6).status == PASS


def test_product_a1_counts():
    V = builtin("Gm", 3)
    assert count_sequence(V.times_affine_line(), 4) == [(3**m - 1) * 3**m for m in range(1, 5)]


# -- Euler's theorem in F_q[t]/(g) ------------------------------------------------

def test_poly_quotient_examples():
    assert wardlaw.poly_quotient(2, [1, 1, 1]).unit_count() == 3
    assert wardlaw.poly_quotient(2, [0, 0, 1]).unit_count() == 2
    assert wardlaw.poly_quotient(2, [0, 1, 1]).unit_count() == 1


def test_poly_quotient_errors():
    with pytest.raises(ValueError):
        wardlaw.poly_quotient(2, [1, 0, 2])
    with pytest.raises(ValueError):
        wardlaw.poly_quotient(6, [0, 1])
    with pytest.raises(ResourceError):
        wardlaw.poly_quotient(3, [0] * 9 + [1])


def test_phi_divisor():
    # t^2 (t + 1) over F_2: (2 - 1) * 2 * (2 - 1)
    assert wardlaw.phi_divisor(2, [0, 0, 1, 1]) == 2
    assert wardlaw.poly_quotient(2, [0, 0, 1, 1]).unit_count() == 2


@pytest.mark.parametrize("q", [2, 3, 4])
def test_wardlaw(q):
    assert wardlaw.euler_check_wardlaw(q, 3 if q < 4 else 2).status == PASS
