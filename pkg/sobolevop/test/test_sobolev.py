import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, strategies as st


def test_weight_factor_from_operator():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.sobolev import WeightFactor

    w = WeightFactor.from_operator(LinearDiffOp([1, 0, -0.5]))
    assert w.rho == 2
    assert w.beta == 0
    assert w.max_degree == 0
    npt.assert_allclose(w.m0(0.3), [[1, 0, -0.5], [0, 0, 0], [-0.5, 0, 0.25]])


def test_weight_factor_from_matrix():

    from sobolevop.sobolev import WeightFactor
    from sobolevop.errors import DomainError

    m = np.array([[1, -1], [-1, 1]])
    w = WeightFactor.from_matrix(m)
    assert w.beta == 0
    npt.assert_allclose(w.m0(np.array([0.1, 2j])), [m, m], atol=1e-14)

    m = np.array([[2, 1j], [-1j, 3]])
    w = WeightFactor.from_matrix(m)
    assert w.beta == 1
    npt.assert_allclose(w.m0(1.0), m, atol=1e-14)

    with pytest.raises(DomainError):
        WeightFactor.from_matrix([[1, 2], [0, 1]])
    with pytest.raises(DomainError):
        WeightFactor.from_matrix([[1, 0], [0, -1]])


def test_factor_map():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.polycore import CPoly
    from sobolevop.sobolev import WeightFactor, factor_map

    w = WeightFactor.from_operator(LinearDiffOp([-1, 1]))
    g, = factor_map(w, CPoly([1, 2, 3]))
    npt.assert_array_equal(g.coeffs, [1, 4, -3])


def test_space_needs_weight():

    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec

    with pytest.raises(ValueError):
        SobolevSpaceSpec(unit_circle_rule(4))


@pytest.mark.parametrize('r, alpha', [(1, 1.0), (2, -1.0), (3, 0.5)])
def test_power_family_orthonormal(r, alpha):

    from sobolevop.catalogue import PowerFamily
    from sobolevop.sobolev import gram_matrix

    family = PowerFamily(r, alpha)
    g = gram_matrix(family.space(12), family.polys(12))
    npt.assert_allclose(g, np.eye(13), atol=1e-9)


def test_dense_route_matches_factor_route():

    from sobolevop.families import exp_sum_family
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        gram_matrix, sobolev_inner

    m = np.array([[1, -1], [-1, 1]])
    rule = unit_circle_rule(9)
    dense = SobolevSpaceSpec.from_matrix(m, rule)
    factor = SobolevSpaceSpec(rule, WeightFactor.from_matrix(m))
    assert not dense.has_factor
    assert factor.has_factor

    polys = [exp_sum_family(n) for n in range(5)]
    npt.assert_allclose(gram_matrix(dense, polys), np.eye(5), atol=1e-10)
    npt.assert_allclose(gram_matrix(factor, polys), np.eye(5), atol=1e-10)
    npt.assert_allclose(sobolev_inner(dense, polys[3], polys[3]), 1,
                        atol=1e-10)
    npt.assert_allclose(sobolev_inner(factor.dense(), polys[2], polys[4]), 0,
                        atol=1e-10)


@pytest.mark.parametrize('kind', ['circle', 'hermite'])
def test_dense_route_polynomial_factor(kind):

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import gauss_rule, unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        gram_matrix, sobolev_inner

    if kind == 'circle':
        rule = unit_circle_rule(16)
    else:
        rule = gauss_rule('hermite', 12)
    weight = WeightFactor([[1, [0, 1]], [[0, 1], 0], [0.5, [1, -1j]]])
    factor = SobolevSpaceSpec(rule, weight)
    dense = factor.dense()
    assert dense.weight_degree == 1

    rng = np.random.default_rng(3)
    polys = [CPoly(rng.standard_normal(n+1) + 1j*rng.standard_normal(n+1))
             for n in range(7)]
    g = gram_matrix(factor, polys)
    atol = 1e-10*np.abs(g).max()
    npt.assert_allclose(gram_matrix(dense, polys), g, rtol=0, atol=atol)
    sandwich = np.array([[sobolev_inner(dense, f, h) for h in polys]
                         for f in polys])
    npt.assert_allclose(sandwich, g, rtol=0, atol=atol)
    npt.assert_allclose(sandwich, sandwich.conj().T, rtol=0, atol=atol)


gaussian_ints = st.builds(complex, st.integers(-9, 9), st.integers(-9, 9))


@given(st.lists(gaussian_ints, max_size=8), st.lists(gaussian_ints,
                                                     max_size=8))
def test_sobolev_inner_hermitian(a, b):

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        sobolev_inner

    space = SobolevSpaceSpec(unit_circle_rule(16),
                             WeightFactor([[1, [0, 1]], [[0, 1], 0],
                                           [0.5, [1, -1j]]]))
    f, h = CPoly(a), CPoly(b)
    fh = sobolev_inner(space, f, h)
    hf = sobolev_inner(space, h, f)
    ff = sobolev_inner(space, f, f)
    hh = sobolev_inner(space, h, h)
    assert ff.real >= 0 and hh.real >= 0
    assert abs(fh - hf.conjugate()) <= 1e-12*(1 + np.sqrt(ff.real*hh.real))


def test_insufficient_rule():

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        sobolev_inner
    from sobolevop.errors import InsufficientRuleError

    space = SobolevSpaceSpec(unit_circle_rule(3),
                             WeightFactor.from_column([1]))
    with pytest.raises(InsufficientRuleError):
        sobolev_inner(space, CPoly.monomial(3), CPoly.monomial(3))


@pytest.mark.parametrize('column', [[0, 0, 1], [0, 1]])
def test_check_positivity_degenerate(column):

    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        check_positivity
    from sobolevop.errors import DegenerateFormError

    space = SobolevSpaceSpec(unit_circle_rule(21),
                             WeightFactor.from_column(column))
    with pytest.raises(DegenerateFormError) as exc:
        check_positivity(space, 5)
    assert exc.value.degree == 0


@pytest.mark.parametrize('name, params', [
    ('power', {'r': 1, 'alpha': 1.0}),
    ('power', {'r': 2, 'alpha': -1.0}),
    ('power', {'r': 3, 'alpha': -1.0}),
    ('expsum', {}),
])
def test_check_positivity(name, params):

    from sobolevop.classical import ClassicalFamily
    from sobolevop.sobolev import check_positivity

    # positive definite but with eigenvalue ratios near 1e-12
    family = ClassicalFamily.from_name(name, **params)
    ev = check_positivity(family.space(12), 12)
    assert len(ev) == 13
    assert ev.min() > 0


def test_check_positivity_first_degree():

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        check_positivity
    from sobolevop.errors import DegenerateFormError

    space = SobolevSpaceSpec(unit_circle_rule(21),
                             WeightFactor.from_column([1]))
    basis = [CPoly.monomial(k) for k in (0, 1, 1, 3)]
    check_positivity(space, 1, basis)
    with pytest.raises(DegenerateFormError) as exc:
        check_positivity(space, 3, basis)
    assert exc.value.degree == 2


def test_gram_schmidt_monomials():

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        gram_schmidt

    space = SobolevSpaceSpec(unit_circle_rule(21),
                             WeightFactor.from_column([1]))
    for k, q in enumerate(gram_schmidt(space, 8)):
        npt.assert_allclose(q.padded(9), CPoly.monomial(k).padded(9),
                            atol=1e-14)


@pytest.mark.parametrize('r, alpha', [(1, 1.0), (2, -1.0), (3, 0.5),
                                      (3, -1.0)])
def test_gram_schmidt_power_family(r, alpha):

    from sobolevop.catalogue import PowerFamily
    from sobolevop.polycore import relative_residual
    from sobolevop.sobolev import gram_schmidt

    family = PowerFamily(r, alpha)
    qs = gram_schmidt(family.space(12), 12)
    for q, y in zip(qs, family.polys(12)):
        assert relative_residual(q, y) <= 1e-8


def test_gram_schmidt_basis_errors():

    from sobolevop.polycore import CPoly
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        gram_schmidt
    from sobolevop.errors import TruncationError

    space = SobolevSpaceSpec(unit_circle_rule(21),
                             WeightFactor.from_column([1]))
    with pytest.raises(TruncationError):
        gram_schmidt(space, 4, [CPoly.monomial(k) for k in range(3)])
    with pytest.raises(ValueError):
        gram_schmidt(space, 2, [CPoly([1]), CPoly([1, 1]), CPoly([1, 1])])


def test_extend_weight():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.sobolev import WeightFactor, extend_weight

    w = WeightFactor.from_operator(LinearDiffOp([-1, 1]))
    ext = extend_weight(w)
    assert ext.rho == 2
    assert ext.beta == 1
    npt.assert_allclose(ext.values(0.5),
                        [[-1, 0], [1, -1], [0, 1]])


def test_extend_weight_two_columns():

    from sobolevop.sobolev import WeightFactor, extend_weight
    from sobolevop.errors import UnsupportedShapeError

    w = WeightFactor([[1, 0], [0, 1]])
    with pytest.raises(UnsupportedShapeError):
        extend_weight(w)


def test_extension_of_exp_sum_family():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.families import exp_sum_family
    from sobolevop.quadrature import unit_circle_rule
    from sobolevop.sobolev import SobolevSpaceSpec, WeightFactor, \
        derivative_gram, extend_weight, gram_matrix

    w = WeightFactor.from_operator(LinearDiffOp([-1, 1]))
    rule = unit_circle_rule(31)
    polys = [exp_sum_family(n) for n in range(16)]
    n = np.arange(16)

    b = derivative_gram(w, rule, polys)
    npt.assert_allclose(b, np.diag(n**2), atol=1e-9)

    g = gram_matrix(SobolevSpaceSpec(rule, extend_weight(w)), polys)
    npt.assert_allclose(g, np.diag(1 + n**2), atol=1e-9)
