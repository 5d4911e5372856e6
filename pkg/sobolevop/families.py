# license: MIT
'''module for the explicit polynomial families'''

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.special import factorial

from .diffop import LinearDiffOp, apply_op, apply_op_magnitude, solve_poly_ode
from .errors import ContourError, DomainError, PreconditionError
from .polycore import CPoly, TruncatedSeries, falling_factorial, poly_eval, \
    poly_roots, relative_residual, series_compose, series_exp, series_mul, \
    series_recip
from .quadrature import gauss_rule

logger = logging.getLogger(__name__)

Z = CPoly([0, 1])


@dataclass(frozen=True)
class FamilyParams:
    r'''Parameters :math:`(r, \alpha)` of the operator :math:`\alpha \,
    d^r/dz^r + 1`.

    The ``branch`` selects the value of :math:`(-1/\alpha)^{1/r}` used in
    the asymptotics, with branch 0 the principal root.

    '''

    r: int = 1
    alpha: float = 0.0
    branch: int = 0

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 1:
            raise ValueError(f'order must be a positive integer: {self.r}')
        object.__setattr__(self, 'r', int(self.r))

    @property
    def epsilon(self) -> complex:
        '''Primitive root of unity :math:`e^{2\\pi i/r}`.'''
        return np.exp(2j*np.pi/self.r)

    @property
    def alpha_r(self) -> complex:
        '''Root :math:`(-1/\\alpha)^{1/r}` of the selected branch.'''
        if self.alpha == 0:
            raise DomainError('domain error: alpha must be nonzero')
        return complex(-1/self.alpha)**(1/self.r)*self.epsilon**self.branch

    @property
    def beta(self) -> float:
        ''':math:`\\sqrt{-1/\\alpha}` for negative alpha.'''
        if not self.alpha < 0:
            raise DomainError('domain error: alpha must be negative')
        return np.sqrt(-1/self.alpha)

    @property
    def operator(self):
        '''The operator :math:`\\alpha \\, d^r + 1`.'''
        return LinearDiffOp.constant([1] + [0]*(self.r-1) + [self.alpha])


def power_family(params, n):
    r'''Monic polynomial solution of :math:`\alpha y^{(r)} + y = z^n`.

    The coefficients :math:`\mu_s` vanish unless :math:`s \equiv n \pmod
    r`, and satisfy :math:`\mu_s = -\alpha [s+r]_r \, \mu_{s+r}` below the
    leading :math:`\mu_n = 1`.  The same floating-point products appear in
    :func:`~sobolevop.diffop.apply_op`, so that applying the operator
    reproduces :math:`z^n` exactly.

    '''
    r, alpha = params.r, params.alpha
    mu = np.zeros(n+1, dtype=complex)
    mu[n] = 1
    for s in range(n-r, -1, -r):
        mu[s] = -(alpha*(falling_factorial(s+r, r)*mu[s+r]))
    return CPoly(mu)


def laplace_family(alpha, n):
    r'''The family :math:`\alpha y'' + y = z^n` for negative alpha.'''
    if not alpha < 0:
        raise DomainError('domain error: alpha must be negative')
    return power_family(FamilyParams(2, alpha), n)


def _laplace_average(p, alpha, t, nodes):
    r'''Evaluate :math:`\frac12 \int_0^\infty [p(t + s/\beta) + p(t -
    s/\beta)] \, e^{-s} \, ds` with a Gauss–Laguerre rule.'''
    if not alpha < 0:
        raise DomainError('domain error: alpha must be negative')
    beta = np.sqrt(-1/alpha)
    rule = gauss_rule('laguerre', nodes)
    t = np.asarray(t)
    s = rule.nodes/beta
    x = t[..., np.newaxis]
    vals = poly_eval(p, x + s) + poly_eval(p, x - s)
    out = vals @ rule.weights/2
    if np.isrealobj(t) and np.all(np.isreal(p.coeffs)):
        out = out.real
    return out[()]


def laplace_integral(alpha, n, t):
    r'''Integral representation of the family :math:`\alpha y'' + y = z^n`.

    Evaluates

    .. math::

        \frac{\beta}{2} e^{\beta t} \int_t^\infty x^n e^{-\beta x} \, dx
        + \frac{\beta}{2} e^{-\beta t} \int_{-\infty}^t x^n e^{\beta x} \, dx
        \;, \quad \beta = \sqrt{-1/\alpha} \;,

    in the form :math:`\frac12 \int_0^\infty [(t + s/\beta)^n + (t -
    s/\beta)^n] \, e^{-s} \, ds`, which a Gauss–Laguerre rule with
    :math:`n + 8` nodes integrates exactly.

    '''
    return _laplace_average(CPoly.monomial(n), alpha, t, n+8)


def laplace_generating_coeffs(alpha, t, order):
    r'''Taylor coefficients of :math:`e^{tz}/(1 + \alpha z^2)`.

    Coefficient :math:`n` equals :math:`w_n(t)/n!` for the family
    :func:`laplace_family`.

    '''
    if not alpha < 0:
        raise DomainError('domain error: alpha must be negative')
    recip = series_recip(TruncatedSeries.from_poly(CPoly([1, 0, alpha]),
                                                   order))
    exp = series_exp(TruncatedSeries([0, t], order))
    return series_mul(recip, exp).coeffs


def exp_sum_family(n):
    r'''Polynomial solution of :math:`y' - y = z^n`.

    Equals :math:`-n! \sum_{k=0}^n z^k/k!`.

    '''
    return solve_poly_ode(LinearDiffOp([-1, 1]), CPoly.monomial(n))


def hermite(n):
    '''Physicists' Hermite polynomial :math:`H_n`.'''
    h0, h1 = CPoly([1]), CPoly([0, 2])
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, 2*Z*h1 - 2*k*h0
    return h1


def coefficient_table(system, n_max):
    '''Table of coefficients of the base polynomials.

    Row ``n`` holds the ascending coefficients of :math:`g_n`.

    '''
    return np.array([system.poly(n).padded(n_max+1) for n in range(n_max+1)])


@dataclass(frozen=True, eq=False)
class GeneratingSpec:
    r'''Generating function :math:`f(w) \, e^{t u(w)}/p(u(w))`.

    The base system provides :math:`u` and :math:`f` and the polynomials
    :math:`g_n` generated by :math:`f(w) \, e^{t u(w)}`.

    Parameters
    ----------
    p : CPoly
        Polynomial with :math:`p(0) \ne 0`.
    system : GeneratingSystem
        Base system.

    '''

    p: CPoly
    system: Any

    def __post_init__(self):
        p = self.p if isinstance(self.p, CPoly) else CPoly(self.p)
        if p.is_zero or p.coeffs[0] == 0:
            raise DomainError('domain error: generating polynomial must not '
                              'vanish at the origin')
        object.__setattr__(self, 'p', p)

    @property
    def operator(self):
        '''The operator :math:`p(d/dt)`.'''
        return LinearDiffOp.constant(self.p)

    @property
    def singular_radius(self) -> float:
        '''Radius of the largest disc where :math:`1/p(u(w))` is
        analytic.'''
        return self.system.singular_radius(self.p)

    def u_series(self, order):
        return self.system.u_series(order)

    def f_series(self, order):
        return self.system.f_series(order)

    def reciprocal_series(self, order):
        '''Taylor coefficients of :math:`1/p(u(w))`.'''
        return series_recip(series_compose(self.p, self.u_series(order)))


def genfun_family(spec, n):
    r'''Polynomial coefficient of :math:`w^n/n!` in the generating function.

    With :math:`b_j` the Taylor coefficients of :math:`1/p(u(w))`, returns

    .. math::

        \varphi_n = \sum_{j=0}^{n} [n]_j \, b_j \, g_{n-j} \;,

    which has degree :math:`n` and solves :math:`p(d/dt) \varphi_n = g_n`.

    '''
    b = spec.reciprocal_series(n+1).coeffs
    out = CPoly()
    for j in range(n+1):
        if b[j] != 0:
            out = out + spec.system.poly(n-j)*(falling_factorial(n, j)*b[j])
    return out


def genfun_generating_coeffs(spec, t, order):
    r'''Taylor coefficients of :math:`f(w) \, e^{t u(w)}/p(u(w))`.

    Coefficient :math:`n` equals :math:`\varphi_n(t)/n!`.

    '''
    f = spec.f_series(order)
    e = series_exp(spec.u_series(order)*t)
    return series_mul(series_mul(f, e), spec.reciprocal_series(order)).coeffs


def genfun_contour(spec, n, t, radius, nodes=256, magnitude=False):
    r'''Evaluate :math:`\varphi_n(t)` by a contour integral.

    Applies the trapezoidal rule with ``nodes`` points on the circle
    :math:`|w| = R` to

    .. math::

        \varphi_n(t) = \frac{n!}{2\pi i} \oint
                    \frac{f(w) \, e^{t u(w)}}{p(u(w))} \, \frac{dw}{w^{n+1}}
                    \;.

    Parameters
    ----------
    spec : GeneratingSpec
        The generating function.
    n : int
        Degree.
    t : complex or array_like
        Evaluation points.
    radius : float
        Contour radius, below the singular radius of :math:`1/p(u(w))`.
    nodes : int, optional
        Number of trapezoidal nodes.
    magnitude : bool, optional
        Also return the magnitude of the summed terms.

    Raises
    ------
    ContourError
        If the contour reaches a singularity.

    '''
    if not radius > 0:
        raise ValueError('contour radius must be positive')
    if radius >= spec.singular_radius:
        raise ContourError(f'contour error: radius {radius} reaches the '
                           f'singular radius {spec.singular_radius}')
    w = radius*np.exp(2j*np.pi*np.arange(nodes)/nodes)
    u = spec.system.u(w)
    t = np.asarray(t)
    terms = spec.system.f(w)*np.exp(t[..., np.newaxis]*u) \
        / poly_eval(spec.p, u)*w**(-n)
    value = factorial(n)*np.mean(terms, axis=-1)
    if magnitude:
        return value[()], (factorial(n)*np.mean(np.abs(terms), axis=-1))[()]
    return value[()]


def lifted_family(xi, params, n):
    r'''Lift of a base polynomial through :math:`\alpha d^r + 1`.

    For a base polynomial :math:`p_n = \sum_j \xi_{n,j} z^j` returns
    :math:`\hat{y}_n = \sum_j \xi_{n,j} \, y_j(r, \alpha)`, the polynomial
    solution of :math:`\alpha \hat{y}_n^{(r)} + \hat{y}_n = p_n`.

    '''
    xi = np.asarray(xi)
    if xi[n, n] == 0:
        raise DomainError(f'domain error: leading coefficient of base '
                          f'polynomial {n} vanishes')
    out = CPoly()
    for j in range(n+1):
        if xi[n, j] != 0:
            out = out + power_family(params, j)*xi[n, j]
    return out


def lifted_integral(xi, alpha, n, z):
    '''Integral representation of the lift through :math:`\\alpha d^2 + 1`,
    as :func:`laplace_integral` with the base polynomial in place of
    :math:`x^n`.'''
    xi = np.asarray(xi)
    return _laplace_average(CPoly(xi[n, :n+1]), alpha, z, n+8)


def asymptotic_limit(params, l, z):
    r'''Limit of the rescaled family along :math:`n = rm + l`.

    Evaluates :math:`\frac{1}{r} \sum_{k=0}^{r-1} \varepsilon^{-lk}
    \exp(\alpha_r \varepsilon^k z)`.

    '''
    r = params.r
    if not 0 <= l < r:
        raise ValueError(f'residue l must lie in [0, {r}): {l}')
    a = params.alpha_r
    k = np.arange(r)
    x = a*np.asarray(z)[..., np.newaxis]*params.epsilon**k
    return (np.exp(-2j*np.pi*l*k/r)*np.exp(x)).sum(axis=-1)/r


def scaled_power_family(params, l, m, z):
    r'''Rescaled family :math:`\alpha_r^n/n! \, y_n(r, \alpha; z)` for
    :math:`n = rm + l`.

    Computed as the partial sum :math:`\sum_{j=0}^{m} (\alpha_r
    z)^{rj+l}/(rj+l)!`, with term ratios instead of factorials.

    '''
    r = params.r
    x = params.alpha_r*np.asarray(z, dtype=complex)
    term = x**l/factorial(l)
    total = term
    xr = x**r
    for j in range(m):
        k = r*j + l
        term = term*xr/np.prod(np.arange(k+1, k+r+1, dtype=float))
        total = total + term
    return total


def asymptotic_error(params, l, m, z_grid):
    '''Largest deviation of the rescaled family from its limit on a grid.'''
    err = np.abs(scaled_power_family(params, l, m, z_grid)
                 - asymptotic_limit(params, l, z_grid))
    return float(np.max(err))


@dataclass(frozen=True, eq=False)
class RootReport:
    '''Root location of a family member.'''

    n: int
    roots: np.ndarray
    zero_count: int
    expected_zero_count: int
    min_modulus: float
    passed: bool


def check_root_location(params, n, tol=1e-8):
    r'''Locate the roots of :math:`y_n(r, \alpha)` for :math:`\alpha \le
    -1`.

    Since :math:`y_n(z) = z^l f(z^r)` with :math:`l = n \bmod r`, there is a
    root of multiplicity :math:`l` at the origin; all other roots satisfy
    :math:`|z| \ge 1`.

    Raises
    ------
    PreconditionError
        If :math:`\alpha > -1`.

    '''
    if params.alpha > -1:
        raise PreconditionError('precondition error: root location requires '
                                'alpha <= -1')
    y = power_family(params, n)
    expected = n % params.r if params.r >= 2 else 0
    if n == 0:
        return RootReport(n, np.zeros(0, dtype=complex), 0, 0, np.inf, True)
    roots = poly_roots(y)
    mod = np.abs(roots)
    zero = mod <= tol
    rest = mod[~zero]
    min_mod = float(rest.min()) if rest.size else np.inf
    count = int(zero.sum())
    passed = count == expected and min_mod >= 1 - tol
    if not passed:
        logger.warning('root location fails for n = %d: %d zero roots, '
                       'min modulus %g', n, count, min_mod)
    return RootReport(n, roots, count, expected, min_mod, passed)


def mixed_relation_residual(params, n):
    r'''Residual of :math:`D y_{n+1} = z \, D y_n` for :math:`D = \alpha d^r
    + 1`.'''
    D = params.operator
    y0, y1 = power_family(params, n), power_family(params, n+1)
    scale = max(apply_op_magnitude(D, y1).max_abs,
                apply_op_magnitude(D, y0).max_abs)
    return relative_residual(apply_op(D, y1), Z*apply_op(D, y0), scale)


def laplace_recurrence_residual(alpha, n):
    r'''Residual of the four-term recurrence

    .. math::

        w_{n+1} + \alpha n(n+1) w_{n-1} = z (w_n + \alpha (n-1) n w_{n-2})

    with :math:`w_{-1} = w_{-2} = 0`.

    '''
    def w(k):
        return laplace_family(alpha, k) if k >= 0 else CPoly()
    a = alpha*n*(n+1)*w(n-1)
    b = alpha*(n-1)*n*w(n-2)
    lhs = w(n+1) + a
    rhs = Z*(w(n) + b)
    return relative_residual(lhs, rhs, max(a.max_abs, b.max_abs))


def laplace_identity_residual(alpha, n):
    r'''Residual of :math:`w_n - n(n-1)/\beta^2 \, w_{n-2} = z^n`.'''
    beta = FamilyParams(2, alpha).beta
    w = laplace_family(alpha, n)
    v = (n*(n-1)/beta**2)*laplace_family(alpha, n-2) if n >= 2 else CPoly()
    return relative_residual(w - v, CPoly.monomial(n),
                             max(w.max_abs, v.max_abs))
