# license: MIT
'''module for the base generating systems'''

from abc import ABCMeta, abstractmethod

import numpy as np
from scipy.special import factorial

from .diffop import LinearDiffOp
from .families import hermite
from .pencil import BandedMatrix, BandedPencil, DiffPencil
from .polycore import CPoly, TruncatedSeries, poly_roots, series_exp
from .quadrature import gauss_rule, unit_circle_rule


class GeneratingSystem(metaclass=ABCMeta):
    r'''Interface for orthogonal polynomial systems :math:`g_n` with
    exponential generating function

    .. math::

        \sum_{n=0}^{\infty} g_n(t) \, \frac{w^n}{n!} = f(w) \, e^{t u(w)}
        \;, \quad u(w) = s \, w \;.

    '''

    #: tag of the system
    name: str

    #: scale :math:`s` of :math:`u(w) = s w`
    scale: float

    #: constants :math:`(b, c)` of the recurrence :math:`(n+1) \psi_{n+1} +
    #: b \psi_{n-1} = c \, t \, \psi_n` of :math:`\psi_n = g_n/n!`
    recurrence: tuple

    @classmethod
    def from_name(cls, name):
        '''Construct a base system by its tag.'''
        try:
            factory = SYSTEMS[name]
        except KeyError:
            raise ValueError(f'unknown system: {name}') from None
        return factory()

    @abstractmethod
    def poly(self, n):
        '''The polynomial :math:`g_n`.'''
        pass

    def polys(self, n_max):
        return [self.poly(n) for n in range(n_max+1)]

    @abstractmethod
    def norm(self, n) -> float:
        '''Squared norm :math:`A_n` of :math:`g_n` in the base measure.'''
        pass

    @abstractmethod
    def rule(self, degree):
        '''Quadrature rule of the base measure, exact for products of
        polynomials up to the given degree.'''
        pass

    @abstractmethod
    def f_series(self, order):
        '''Taylor series of :math:`f`.'''
        pass

    @abstractmethod
    def f(self, w):
        '''The function :math:`f`.'''
        pass

    @property
    @abstractmethod
    def diff_pencil(self):
        '''Differential pencil :math:`R_0 g_n = \\lambda_n S_0 g_n`.'''
        pass

    @abstractmethod
    def recurrence_pencil(self, size):
        '''Banded pencil of the three-term recurrence.'''
        pass

    def u_series(self, order):
        return TruncatedSeries([0, self.scale], order)

    def u(self, w):
        return self.scale*np.asarray(w)

    def singular_radius(self, p):
        '''Radius of the largest disc in which :math:`1/p(u(w))` is
        analytic.'''
        if p.degree < 1:
            return np.inf
        return float(np.abs(poly_roots(p)).min())/abs(self.scale)

    def __repr__(self):
        return f'{type(self).__name__}()'


class MonomialSystem(GeneratingSystem):
    '''Monomials :math:`t^n`, orthonormal on the unit circle.'''

    name = 'monomials'
    scale = 1.0
    recurrence = (0.0, 1.0)

    def poly(self, n):
        return CPoly.monomial(n)

    def norm(self, n):
        return 1.0

    def rule(self, degree):
        return unit_circle_rule(2*max(degree, 0) + 1)

    def f_series(self, order):
        return TruncatedSeries([1], order)

    def f(self, w):
        return np.ones_like(w)

    @property
    def diff_pencil(self):
        return DiffPencil(LinearDiffOp([0, [0, 1]]), LinearDiffOp.identity(),
                          lambda n: n)

    def recurrence_pencil(self, size):
        # t^n = t t^(n-1) holds from row 1
        shift = ((n, n-1, 1.) for n in range(size))
        return BandedPencil(BandedMatrix(np.ones((1, size)), 0, 0),
                            BandedMatrix.from_entries(size, 1, 0, shift),
                            first_row=1)


class HermiteSystem(GeneratingSystem):
    '''Hermite polynomials :math:`H_n`, orthogonal for :math:`e^{-t^2}`.'''

    name = 'hermite'
    scale = 2.0
    recurrence = (2.0, 2.0)

    def poly(self, n):
        return hermite(n)

    def norm(self, n):
        return 2.0**n*factorial(n)*np.sqrt(np.pi)

    def rule(self, degree):
        return gauss_rule('hermite', max(degree, 0) + 8)

    def f_series(self, order):
        return series_exp(TruncatedSeries([0, 0, -1], order))

    def f(self, w):
        return np.exp(-np.asarray(w)**2)

    @property
    def diff_pencil(self):
        return DiffPencil(LinearDiffOp([0, [0, -2], 1]),
                          LinearDiffOp.identity(), lambda n: -2*n)

    def recurrence_pencil(self, size):
        left, right = [], []
        for n in range(size):
            left += [(n, n+1, 1.), (n, n-1, 2.*n)]
            right += [(n, n, 2.)]
        return BandedPencil(BandedMatrix.from_entries(size, 1, 1, left),
                            BandedMatrix.from_entries(size, 0, 0, right))


SYSTEMS = {
    'monomials': MonomialSystem,
    'hermite': HermiteSystem,
}
