# license: MIT
'''module for complex polynomials and truncated power series'''

import logging
from numbers import Number

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import DomainError, SingularSeriesError

logger = logging.getLogger(__name__)


class CPoly:
    '''Complex polynomial with coefficients in ascending degree.

    Instances are immutable.  Trailing zero coefficients are stripped on
    construction, so that the last stored coefficient is nonzero unless the
    polynomial is the zero polynomial, which has no coefficients and degree
    ``-1``.

    Parameters
    ----------
    coeffs : array_like
        Coefficients :math:`c_0, c_1, \\ldots` of :math:`\\sum_k c_k z^k`.

    '''

    __slots__ = ('_c',)

    # numpy scalars defer to the reflected operators
    __array_ufunc__ = None

    def __init__(self, coeffs=()):
        c = np.array(coeffs, dtype=complex).ravel()
        nz = np.flatnonzero(c)
        c = c[:nz[-1]+1] if nz.size else c[:0]
        c.flags.writeable = False
        self._c = c

    @classmethod
    def monomial(cls, n, scale=1.0):
        '''The polynomial :math:`s \\, z^n`.'''
        c = np.zeros(n+1, dtype=complex)
        c[n] = scale
        return cls(c)

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        '''The polynomial :math:`a \\prod_i (z - z_i)`.'''
        p = cls([leading])
        for z in roots:
            p = p*cls([-z, 1])
        return p

    @property
    def coeffs(self):
        '''Read-only array of coefficients in ascending degree.'''
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._c) == 0

    @property
    def leading(self) -> complex:
        '''Leading coefficient, zero for the zero polynomial.'''
        return self._c[-1] if len(self._c) else 0j

    @property
    def max_abs(self) -> float:
        '''Largest coefficient magnitude.'''
        return float(np.abs(self._c).max()) if len(self._c) else 0.0

    def padded(self, size):
        '''Coefficient array zero-padded (or cut) to the given size.'''
        out = np.zeros(size, dtype=complex)
        n = min(size, len(self._c))
        out[:n] = self._c[:n]
        return out

    def abs(self):
        '''Polynomial with the absolute values of the coefficients.'''
        return CPoly(np.abs(self._c))

    def conj(self):
        '''Polynomial with conjugated coefficients.'''
        return CPoly(np.conj(self._c))

    def deriv(self, k=1):
        return poly_derivative(self, k)

    def __call__(self, z):
        return poly_eval(self, z)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return CPoly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return CPoly(-self._c)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CPoly):
            if self.is_zero or other.is_zero:
                return CPoly()
            return CPoly(np.convolve(self._c, other._c))
        if isinstance(other, Number):
            return CPoly(self._c*other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return CPoly(self._c/other)
        return NotImplemented

    def __repr__(self):
        return f'CPoly({self._c.tolist()})'


def _coerce(value):
    if isinstance(value, CPoly):
        return value
    if isinstance(value, Number):
        return CPoly([value])
    return NotImplemented


def falling_factorial(c, k):
    '''Falling factorial :math:`[c]_k = c (c-1) \\cdots (c-k+1)`.

    Works elementwise on arrays; :math:`[c]_0 = 1`.

    '''
    c = np.asarray(c)
    out = np.ones_like(c, dtype=np.result_type(c, float))
    for i in range(k):
        out = out*(c - i)
    return out[()] if out.ndim == 0 else out


def poly_eval(p, z):
    '''Evaluate a polynomial by Horner's scheme.'''
    if p.is_zero:
        return np.zeros_like(z, dtype=complex)[()]
    return npp.polyval(z, p.coeffs)


def poly_derivative(p, k=1):
    '''The ``k``-th derivative of a polynomial.'''
    if k == 0:
        return p
    if p.degree < k:
        return CPoly()
    j = np.arange(k, p.degree+1)
    return CPoly(falling_factorial(j, k)*p.coeffs[k:])


def relative_residual(lhs, rhs, scale=0.0):
    '''Coefficientwise residual of ``lhs - rhs`` relative to the largest
    coefficient involved.

    The optional ``scale`` is the magnitude of any intermediate terms that
    cancelled in forming ``lhs`` or ``rhs``.

    '''
    res = (lhs - rhs).max_abs
    s = max(lhs.max_abs, rhs.max_abs, scale)
    return res/s if s > 0 else res


def _cauchy_radius(a):
    '''Positive root of the Cauchy polynomial of monic coefficients ``a``.'''
    d = len(a) - 1
    m = np.abs(a[:-1])
    k = np.arange(d)
    lo = np.max(m**(1/(d - k)))
    hi = 2*lo
    # bisect g(x) = sum |a_k| x^(k-d) = 1 on a log scale
    for _ in range(60):
        mid = np.sqrt(lo*hi)
        if np.sum(m*mid**(k - d)) > 1:
            lo = mid
        else:
            hi = mid
    return hi


def poly_roots(p, maxiter=200, tol=1e-13):
    r'''All roots of a polynomial, with multiplicity.

    Roots at the origin are split off exactly from vanishing low-order
    coefficients.  The remaining roots are found by Aberth–Ehrlich
    simultaneous iteration, started on a circle whose radius is the Cauchy
    bound, i.e. the positive root of :math:`|a_d| x^d - \sum_{k<d} |a_k|
    x^k`.

    Parameters
    ----------
    p : CPoly
        Polynomial of degree at least one.
    maxiter : int, optional
        Maximum number of iterations.
    tol : float, optional
        A root is converged once its update is below ``tol*(1 + |root|)``.

    Returns
    -------
    roots : array_like (deg p,)
        Complex roots.

    '''
    if p.degree < 1:
        raise DomainError('domain error: root finding needs degree >= 1')

    c = p.coeffs
    nzero = int(np.flatnonzero(c)[0])
    a = c[nzero:]/c[-1]
    d = len(a) - 1
    zeros = np.zeros(nzero, dtype=complex)

    if d == 0:
        return zeros
    if d == 1:
        return np.concatenate([zeros, [-a[0]]])

    radius = _cauchy_radius(a)
    z = radius*np.exp(1j*(2*np.pi*np.arange(d)/d + 0.4))
    active = np.ones(d, dtype=bool)

    for it in range(maxiter):
        za = z[active]
        b = np.full_like(za, a[d])
        db = np.zeros_like(za)
        for ak in a[-2::-1]:
            db = db*za + b
            b = b*za + ak
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = np.where(db != 0, b/np.where(db != 0, db, 1), b)
            diff = za[:, np.newaxis] - z[np.newaxis, :]
            diff[diff == 0] = np.inf
            s = np.sum(1/diff, axis=1)
            step = ratio/(1 - ratio*s)
        step[~np.isfinite(step)] = 0
        z[active] = za - step
        done = np.abs(step) <= tol*(1 + np.abs(z[active]))
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not active.any():
            logger.debug('aberth iteration converged after %d steps', it+1)
            break
    else:
        logger.warning('aberth iteration: %d of %d roots not converged after '
                       '%d steps', active.sum(), d, maxiter)

    return np.concatenate([zeros, z])


class TruncatedSeries:
    '''Power series :math:`\\sum_{k<N} s_k w^k` truncated at order ``N``.

    Instances are immutable; arithmetic between series requires equal order.

    '''

    __slots__ = ('_c',)

    def __init__(self, coeffs, order=None):
        c = np.array(coeffs, dtype=complex).ravel()
        if order is not None:
            if order < 1:
                raise ValueError('series order must be positive')
            out = np.zeros(order, dtype=complex)
            n = min(order, len(c))
            out[:n] = c[:n]
            c = out
        if len(c) == 0:
            raise ValueError('series order must be positive')
        c.flags.writeable = False
        self._c = c

    @classmethod
    def from_poly(cls, p, order):
        '''The polynomial ``p`` truncated at ``order``.'''
        return cls(p.coeffs, order)

    @property
    def coeffs(self):
        return self._c

    @property
    def order(self) -> int:
        return len(self._c)

    def _check(self, other):
        if other.order != self.order:
            raise ValueError(f'series order mismatch: {self.order} and '
                             f'{other.order}')

    def __add__(self, other):
        if isinstance(other, Number):
            c = self._c.copy()
            c[0] += other
            return TruncatedSeries(c)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(self._c + other._c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def __sub__(self, other):
        if not isinstance(other, (Number, TruncatedSeries)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries(self._c*other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f'TruncatedSeries({self._c.tolist()})'


def series_mul(a, b):
    '''Product of two series of equal order.'''
    a._check(b)
    return TruncatedSeries(np.convolve(a.coeffs, b.coeffs)[:a.order])


def series_recip(s):
    '''Reciprocal :math:`t` of a series, with :math:`s t = 1 + O(w^N)`.'''
    c = s.coeffs
    if c[0] == 0:
        raise SingularSeriesError('singular series error: constant term '
                                  'vanishes')
    t = np.zeros_like(c)
    t[0] = 1/c[0]
    for n in range(1, s.order):
        t[n] = -np.dot(c[1:n+1], t[n-1::-1])/c[0]
    return TruncatedSeries(t)


def series_compose(outer, inner):
    '''Composition :math:`p(u(w))` of a polynomial with a series.

    The inner series must have vanishing constant term.

    '''
    if inner.coeffs[0] != 0:
        raise DomainError('domain error: inner series of a composition must '
                          'vanish at the origin')
    n = inner.order
    out = np.zeros(n, dtype=complex)
    for c in outer.coeffs[::-1]:
        out = np.convolve(out, inner.coeffs)[:n]
        out[0] += c
    return TruncatedSeries(out)


def series_exp(s):
    '''Exponential of a series.'''
    c = s.coeffs
    e = np.zeros_like(c)
    e[0] = np.exp(c[0])
    k = np.arange(s.order)
    for n in range(1, s.order):
        e[n] = np.dot(k[1:n+1]*c[1:n+1], e[n-1::-1])/n
    return TruncatedSeries(e)
