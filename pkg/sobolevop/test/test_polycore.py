import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, strategies as st


def test_cpoly_normal_form():

    from sobolevop.polycore import CPoly

    p = CPoly([1, 2, 0, 0])
    assert p.degree == 1
    npt.assert_array_equal(p.coeffs, [1, 2])

    z = CPoly([0, 0])
    assert z.is_zero
    assert z.degree == -1
    assert z.max_abs == 0

    assert CPoly.monomial(3, 2.0).degree == 3
    assert CPoly.monomial(3, 2.0).leading == 2


def test_cpoly_arithmetic():

    from sobolevop.polycore import CPoly

    a = CPoly([1, 1])
    b = CPoly([1, -1])

    npt.assert_array_equal((a*b).coeffs, [1, 0, -1])
    npt.assert_array_equal((a + b).coeffs, [2])
    npt.assert_array_equal((a - a).coeffs, [])
    npt.assert_array_equal((2*a).coeffs, [2, 2])
    npt.assert_array_equal((np.float64(2)*a).coeffs, [2, 2])
    npt.assert_array_equal((1 - a).coeffs, [0, -1])
    npt.assert_array_equal((a/2).coeffs, [0.5, 0.5])
    npt.assert_array_equal(CPoly([1j, 2]).conj().coeffs, [-1j, 2])
    npt.assert_array_equal(CPoly([-1, 2j]).abs().coeffs, [1, 2])


def test_from_roots():

    from sobolevop.polycore import CPoly

    p = CPoly.from_roots([1, -1], 3)
    npt.assert_allclose(p.coeffs, [-3, 0, 3])


@pytest.mark.parametrize('c, k, expected', [
    (5, 0, 1),
    (5, 2, 20),
    (3, 3, 6),
    (3, 4, 0),
    (-1, 2, 2),
])
def test_falling_factorial(c, k, expected):

    from sobolevop.polycore import falling_factorial

    assert falling_factorial(c, k) == expected


def test_falling_factorial_array():

    from sobolevop.polycore import falling_factorial

    npt.assert_array_equal(falling_factorial(np.arange(5), 2),
                           [0, 0, 2, 6, 12])


def test_poly_eval_and_derivative():

    from sobolevop.polycore import CPoly, poly_eval, poly_derivative

    p = CPoly([1, 0, 3, 1])
    z = np.array([0., 1., -2., 1j])
    npt.assert_allclose(poly_eval(p, z), 1 + 3*z**2 + z**3)
    npt.assert_allclose(p(2.0), 21)

    npt.assert_array_equal(poly_derivative(p).coeffs, [0, 6, 3])
    npt.assert_array_equal(poly_derivative(p, 3).coeffs, [6])
    assert poly_derivative(p, 4).is_zero
    assert poly_derivative(p, 0) is p

    npt.assert_array_equal(poly_eval(CPoly(), z), np.zeros(4))


def test_relative_residual():

    from sobolevop.polycore import CPoly, relative_residual

    a = CPoly([1, 2])
    b = CPoly([1, 2 + 1e-12])
    assert relative_residual(a, b) == pytest.approx(0.5e-12, rel=1e-3)
    assert relative_residual(a, b, 1e4) == pytest.approx(1e-16, rel=1e-3)
    assert relative_residual(CPoly(), CPoly()) == 0


def test_poly_roots():

    from sobolevop.polycore import CPoly, poly_roots

    roots = np.array([1, -2, 0.5j, 3 - 1j])
    p = CPoly.from_roots(roots, 2.0)
    found = poly_roots(p)
    npt.assert_allclose(np.sort_complex(found), np.sort_complex(roots),
                        atol=1e-10)


def test_poly_roots_at_origin():

    from sobolevop.polycore import CPoly, poly_roots

    found = poly_roots(CPoly([0, 0, 1, 1]))
    assert np.sum(found == 0) == 2
    npt.assert_allclose(found[found != 0], [-1], atol=1e-12)


def test_poly_roots_constant():

    from sobolevop.polycore import CPoly, poly_roots
    from sobolevop.errors import DomainError

    with pytest.raises(DomainError):
        poly_roots(CPoly([3]))


def test_series_arithmetic():

    from sobolevop.polycore import TruncatedSeries

    a = TruncatedSeries([1, 2, 3], 4)
    b = TruncatedSeries([1, -1], 4)

    npt.assert_array_equal(a.coeffs, [1, 2, 3, 0])
    npt.assert_array_equal((a*b).coeffs, [1, 1, 1, -3])
    npt.assert_array_equal((a + 1).coeffs, [2, 2, 3, 0])
    npt.assert_array_equal((a - b).coeffs, [0, 3, 3, 0])
    npt.assert_array_equal((1 - b).coeffs, [0, 1, 0, 0])
    npt.assert_array_equal((2*b - a).coeffs, [1, -4, -3, 0])

    with pytest.raises(ValueError):
        a + TruncatedSeries([1], 2)


@given(c0=st.floats(0.5, 2.0),
       rest=st.lists(st.floats(-1.0, 1.0), min_size=0, max_size=6),
       order=st.integers(1, 8))
def test_series_recip(c0, rest, order):

    from sobolevop.polycore import TruncatedSeries, series_mul, series_recip

    s = TruncatedSeries([c0] + rest, order)
    t = series_recip(s)
    one = np.zeros(order)
    one[0] = 1
    npt.assert_allclose(series_mul(s, t).coeffs, one, atol=1e-9)


def test_series_recip_singular():

    from sobolevop.polycore import TruncatedSeries, series_recip
    from sobolevop.errors import SingularSeriesError

    with pytest.raises(SingularSeriesError):
        series_recip(TruncatedSeries([0, 1], 3))

    with pytest.raises(ZeroDivisionError):
        series_recip(TruncatedSeries([0, 1], 3))


def test_series_compose():

    from sobolevop.polycore import CPoly, TruncatedSeries, series_compose
    from sobolevop.errors import DomainError

    u = TruncatedSeries([0, 2], 5)
    npt.assert_array_equal(series_compose(CPoly([1, 0, 1]), u).coeffs,
                           [1, 0, 4, 0, 0])

    with pytest.raises(DomainError):
        series_compose(CPoly([1, 1]), TruncatedSeries([1, 1], 3))


def test_series_exp():

    from scipy.special import factorial
    from sobolevop.polycore import TruncatedSeries, series_exp

    e = series_exp(TruncatedSeries([0, 1], 8))
    npt.assert_allclose(e.coeffs, 1/factorial(np.arange(8)))

    e = series_exp(TruncatedSeries([1, 0, -1], 5))
    npt.assert_allclose(e.coeffs, np.e*np.array([1, 0, -1, 0, 0.5]))


gaussian_ints = st.builds(complex, st.integers(-9, 9), st.integers(-9, 9))
int_coeffs = st.lists(gaussian_ints, max_size=33)


@given(int_coeffs, int_coeffs, int_coeffs)
def test_ring_axioms(a, b, c):

    from sobolevop.polycore import CPoly

    p, q, s = CPoly(a), CPoly(b), CPoly(c)
    npt.assert_array_equal((p*q).coeffs, (q*p).coeffs)
    npt.assert_array_equal(((p*q)*s).coeffs, (p*(q*s)).coeffs)
    npt.assert_array_equal((p*(q + s)).coeffs, (p*q + p*s).coeffs)
    npt.assert_array_equal(((p + q) - q).coeffs, p.coeffs)


@given(int_coeffs, int_coeffs,
       st.lists(st.complex_numbers(max_magnitude=1.0), min_size=1,
                max_size=10))
def test_product_at_sample_points(a, b, z):

    from sobolevop.polycore import CPoly, poly_eval

    p, q = CPoly(a), CPoly(b)
    z = np.array(z)
    err = np.abs(poly_eval(p*q, z) - poly_eval(p, z)*poly_eval(q, z))
    mag = poly_eval(p.abs(), np.abs(z)).real \
        * poly_eval(q.abs(), np.abs(z)).real
    assert np.all(err <= 1e-12*(1 + mag))


@given(int_coeffs, int_coeffs, gaussian_ints)
def test_derivative_rules(a, b, lam):

    from sobolevop.polycore import CPoly, poly_derivative

    p, q = CPoly(a), CPoly(b)
    npt.assert_array_equal(poly_derivative(lam*p + q).coeffs,
                           (lam*poly_derivative(p)
                            + poly_derivative(q)).coeffs)
    npt.assert_array_equal(poly_derivative(p*q).coeffs,
                           (poly_derivative(p)*q
                            + p*poly_derivative(q)).coeffs)


@pytest.mark.parametrize('degree', [1, 2, 5, 10, 15, 20])
def test_poly_roots_vieta(degree):

    from sobolevop.polycore import CPoly, poly_roots

    rng = np.random.default_rng(degree)
    c = rng.standard_normal(degree+1) + 1j*rng.standard_normal(degree+1)
    c[-1] = 1 + 0.5j
    roots = poly_roots(CPoly(c))
    assert len(roots) == degree

    total = -c[-2]/c[-1]
    product = (-1)**degree*c[0]/c[-1]
    assert abs(roots.sum() - total) <= 1e-8*max(1, abs(total))
    assert abs(roots.prod() - product) <= 1e-8*max(1, abs(product))


def test_poly_roots_reconstruct():

    from sobolevop.polycore import CPoly, poly_roots, relative_residual

    rng = np.random.default_rng(8)
    p = CPoly(rng.standard_normal(9) + 1j*rng.standard_normal(9))
    q = CPoly.from_roots(poly_roots(p), p.leading)
    assert q.degree == 8
    assert relative_residual(q, p) <= 1e-8


def test_poly_roots_examples():

    from sobolevop.polycore import CPoly, poly_roots

    found = poly_roots(CPoly([2, 0, 1]))
    npt.assert_allclose(found[np.argsort(found.imag)],
                        [-np.sqrt(2)*1j, np.sqrt(2)*1j], atol=1e-12)
    npt.assert_array_equal(poly_roots(CPoly([0, 0, 1])), [0, 0])


@given(c0=st.floats(1.0, 2.0),
       rest=st.lists(st.floats(-0.1, 0.1), min_size=0, max_size=6),
       order=st.integers(1, 8))
def test_series_recip_involution(c0, rest, order):

    from sobolevop.polycore import TruncatedSeries, series_recip

    s = TruncatedSeries([c0] + rest, order)
    again = series_recip(series_recip(s))
    npt.assert_allclose(again.coeffs, s.coeffs, rtol=0,
                        atol=1e-12*np.abs(s.coeffs).max())


@pytest.mark.parametrize('alpha, r, order', [
    (-1.0, 1, 4),
    (-1.0, 2, 9),
    (0.5, 3, 10),
    (2.0, 1, 6),
])
def test_series_recip_geometric(alpha, r, order):

    from sobolevop.polycore import TruncatedSeries, series_recip

    c = np.zeros(r+1)
    c[0], c[r] = 1, alpha
    t = series_recip(TruncatedSeries(c, order))
    expected = np.zeros(order)
    k = np.arange(0, order, r)
    expected[k] = (-alpha)**(k//r)
    npt.assert_allclose(t.coeffs, expected, rtol=1e-15, atol=0)


def test_series_from_poly():

    from sobolevop.polycore import CPoly, TruncatedSeries

    s = TruncatedSeries.from_poly(CPoly([1, 2, 3]), 2)
    npt.assert_array_equal(s.coeffs, [1, 2])
    s = TruncatedSeries.from_poly(CPoly(), 3)
    npt.assert_array_equal(s.coeffs, [0, 0, 0])
