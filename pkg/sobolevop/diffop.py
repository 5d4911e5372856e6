# license: MIT
'''module for linear differential operators with polynomial coefficients'''

from dataclasses import dataclass
from numbers import Number
from typing import Optional

import numpy as np
from scipy.linalg import solve_triangular
from scipy.special import comb

from .errors import UnsolvableOperatorError
from .polycore import CPoly, falling_factorial, poly_derivative


def _as_poly(value):
    if isinstance(value, CPoly):
        return value
    if isinstance(value, Number):
        return CPoly([value])
    return CPoly(value)


class LinearDiffOp:
    r'''Linear differential operator :math:`D = \sum_{k=0}^{r} d_k(z) \,
    (d/dz)^k` with polynomial coefficients.

    Vanishing top coefficients are dropped, so that the order :math:`r` is
    the largest :math:`k` with nonzero :math:`d_k`.

    Parameters
    ----------
    coeffs : sequence
        The coefficients :math:`d_0, \ldots, d_r`, each a :class:`CPoly`, a
        number, or a sequence of polynomial coefficients.

    '''

    __slots__ = ('_d',)

    def __init__(self, coeffs):
        d = [_as_poly(c) for c in coeffs]
        while len(d) > 1 and d[-1].is_zero:
            d.pop()
        self._d = tuple(d) if d else (CPoly(),)

    @classmethod
    def identity(cls):
        return cls([1])

    @classmethod
    def derivative(cls, k=1):
        '''The operator :math:`(d/dz)^k`.'''
        return cls([0]*k + [1])

    @classmethod
    def multiplication(cls, p):
        '''The operator of multiplication by a polynomial.'''
        return cls([_as_poly(p)])

    @classmethod
    def constant(cls, coeffs):
        r'''The operator :math:`p(d/dz) = \sum_k c_k (d/dz)^k` of a
        polynomial :math:`p` with coefficients :math:`c_k`.'''
        if isinstance(coeffs, CPoly):
            coeffs = coeffs.coeffs
        return cls([CPoly([c]) for c in coeffs])

    @property
    def order(self) -> int:
        return len(self._d) - 1

    @property
    def coeffs(self):
        '''Tuple of coefficient polynomials :math:`d_0, \\ldots, d_r`.'''
        return self._d

    @property
    def is_constant(self) -> bool:
        '''Whether all coefficients are constants.'''
        return all(d.degree < 1 for d in self._d)

    def constant_coeffs(self):
        '''Coefficients :math:`c_k` of a constant-coefficient operator.'''
        if not self.is_constant:
            raise ValueError('operator has non-constant coefficients')
        return np.array([d.padded(1)[0] for d in self._d])

    def __call__(self, y):
        return apply_op(self, y)

    def __add__(self, other):
        if not isinstance(other, LinearDiffOp):
            return NotImplemented
        n = max(len(self._d), len(other._d))
        a = self._d + (CPoly(),)*(n - len(self._d))
        b = other._d + (CPoly(),)*(n - len(other._d))
        return LinearDiffOp([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return LinearDiffOp([-d for d in self._d])

    def __sub__(self, other):
        if not isinstance(other, LinearDiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Number, CPoly)):
            return LinearDiffOp([d*other for d in self._d])
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        r'''Composition :math:`(A \circ B) y = A(B y)`.

        Uses :math:`a \, d^i \circ b \, d^j = a \sum_m \binom{i}{m} b^{(m)}
        d^{i+j-m}`.

        '''
        if not isinstance(other, LinearDiffOp):
            return NotImplemented
        out = [CPoly()]*(self.order + other.order + 1)
        for i, a in enumerate(self._d):
            if a.is_zero:
                continue
            for j, b in enumerate(other._d):
                for m in range(min(i, b.degree) + 1):
                    term = a*poly_derivative(b, m)*comb(i, m, exact=True)
                    out[i+j-m] = out[i+j-m] + term
        return LinearDiffOp(out)

    def __eq__(self, other):
        if not isinstance(other, LinearDiffOp):
            return NotImplemented
        return len(self._d) == len(other._d) and all(
            np.array_equal(a.coeffs, b.coeffs)
            for a, b in zip(self._d, other._d))

    __hash__ = None

    def __repr__(self):
        return f'LinearDiffOp({list(self._d)!r})'


def apply_op(D, y):
    r'''Apply a differential operator to a polynomial.

    Computes :math:`\sum_k d_k \, y^{(k)}` at the coefficient level.

    '''
    out = CPoly()
    for k, d in enumerate(D.coeffs):
        if d.is_zero:
            continue
        out = out + d*poly_derivative(y, k)
    return out


def apply_op_magnitude(D, y):
    r'''Magnitude of the terms combined by :func:`apply_op`.

    Returns :math:`\sum_k |d_k| \, |y|^{(k)}` with coefficientwise absolute
    values, a bound for every intermediate coefficient of ``D(y)``.

    '''
    ya = y.abs()
    out = CPoly()
    for k, d in enumerate(D.coeffs):
        out = out + d.abs()*poly_derivative(ya, k)
    return out


@dataclass(frozen=True)
class Solvability:
    '''Outcome of the solvability test of a differential operator.

    Truthy if the operator maps every polynomial of degree ``n`` to a
    polynomial of degree ``n``, up to the tested degree.

    Attributes
    ----------
    ok : bool
        Whether the test passed.
    clause : str or None
        The violated clause, either ``'degree'`` (a coefficient :math:`d_k`
        has degree above :math:`k`) or ``'leading-sum'`` (the leading
        coefficient of :math:`D z^n` vanishes).
    index : int or None
        The offending ``k`` for the degree clause, ``n`` for the leading-sum
        clause.
    message : str
        Human-readable description.

    '''

    ok: bool
    clause: Optional[str] = None
    index: Optional[int] = None
    message: str = 'operator is solvable'

    def __bool__(self):
        return self.ok


def leading_sums(D, n_max):
    r'''Leading coefficients :math:`\sum_j [n]_j d_{j,j}` of :math:`D z^n`
    for :math:`n = 0, \ldots, n_{\max}`.'''
    n = np.arange(n_max+1)
    out = np.zeros(n_max+1, dtype=complex)
    for j, d in enumerate(D.coeffs):
        out = out + falling_factorial(n, j)*d.padded(j+1)[j]
    return out


def check_solvability(D, n_max):
    r'''Test whether a differential operator preserves polynomial degrees.

    The operator :math:`D` maps :math:`z^n` to a polynomial of degree
    :math:`n` for every :math:`n \le n_{\max}` if and only if every
    coefficient :math:`d_k` has degree at most :math:`k` and the leading
    sums :math:`\sum_j [n]_j d_{j,j}` do not vanish.

    A leading sum counts as vanishing if its magnitude is at most
    ``1e-12*sum_j |d_jj|*[n_max]_j``.

    Parameters
    ----------
    D : LinearDiffOp
        Operator to test.
    n_max : int
        Largest degree tested.

    Returns
    -------
    result : Solvability
        Truthy diagnostic naming the first violated clause, if any.

    '''
    for k, d in enumerate(D.coeffs):
        if d.degree > k:
            return Solvability(False, 'degree', k, f'coefficient d_{k} has '
                               f'degree {d.degree} > {k}')

    scale = sum(abs(d.padded(j+1)[j])*falling_factorial(n_max, j)
                for j, d in enumerate(D.coeffs))
    sums = leading_sums(D, n_max)
    bad = np.flatnonzero(np.abs(sums) <= 1e-12*scale)
    if bad.size:
        n = int(bad[0])
        return Solvability(False, 'leading-sum', n,
                           f'leading coefficient of D z^{n} vanishes')
    return Solvability(True)


def solve_poly_ode(D, u):
    r'''Polynomial solution of the differential equation :math:`D y = u`.

    The solution is unique and has the degree of ``u``.  Its coefficients
    solve the upper triangular system whose columns are the coefficients of
    :math:`D z^j`, by back substitution.

    Raises
    ------
    UnsolvableOperatorError
        If the operator does not preserve degrees up to ``deg u``.

    '''
    n = max(u.degree, 0)
    check = check_solvability(D, n)
    if not check:
        raise UnsolvableOperatorError(check)
    if u.is_zero:
        return CPoly()
    t = np.empty((n+1, n+1), dtype=complex)
    for j in range(n+1):
        t[:, j] = apply_op(D, CPoly.monomial(j)).padded(n+1)
    return CPoly(solve_triangular(t, u.padded(n+1), lower=False))
