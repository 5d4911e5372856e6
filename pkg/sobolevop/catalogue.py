# license: MIT
'''module for the shipped families of Sobolev orthogonal polynomials'''

from .classical import ClassicalFamily
from .diffop import LinearDiffOp
from .errors import DomainError
from .families import FamilyParams, GeneratingSpec, coefficient_table, \
    exp_sum_family, genfun_family, hermite, laplace_family, lifted_family, \
    power_family
from .pencil import genfun_recurrence_pencil, laplace_recurrence_pencil
from .polycore import CPoly
from .systems import GeneratingSystem, MonomialSystem, HermiteSystem


def _system(system):
    if isinstance(system, GeneratingSystem):
        return system
    return GeneratingSystem.from_name(system)


class MonomialFamily(ClassicalFamily):
    '''The monomials :math:`z^n`, orthonormal on the unit circle.'''

    name = 'monomials'

    @property
    def base(self):
        return MonomialSystem()

    @property
    def operator(self):
        return LinearDiffOp.identity()

    def poly(self, n):
        return CPoly.monomial(n)

    def recurrence_pencil(self, size):
        return self.base.recurrence_pencil(size)


class HermiteFamily(ClassicalFamily):
    '''The Hermite polynomials :math:`H_n`.'''

    name = 'hermite'

    @property
    def base(self):
        return HermiteSystem()

    @property
    def operator(self):
        return LinearDiffOp.identity()

    def poly(self, n):
        return hermite(n)

    def recurrence_pencil(self, size):
        return self.base.recurrence_pencil(size)


class PowerFamily(ClassicalFamily):
    r'''Polynomial solutions of :math:`\alpha y_n^{(r)} + y_n = z^n`.

    The family is orthonormal in the Sobolev space on the unit circle with
    weight factor :math:`(1, 0, \ldots, 0, \alpha)^T`.

    Parameters
    ----------
    r : int
        Order of the derivative.
    alpha : float
        Coefficient of the derivative.
    branch : int, optional
        Branch of :math:`(-1/\alpha)^{1/r}` for the asymptotics.

    '''

    name = 'power'

    def __init__(self, r=1, alpha=0.0, branch=0):
        self._p = FamilyParams(r, alpha, branch)

    @property
    def family_params(self):
        return self._p

    @property
    def params(self):
        return {'r': self._p.r, 'alpha': self._p.alpha}

    @property
    def base(self):
        return MonomialSystem()

    @property
    def operator(self):
        return self._p.operator

    def poly(self, n):
        return power_family(self._p, n)

    def recurrence_pencil(self, size):
        return genfun_recurrence_pencil(self.operator.constant_coeffs(),
                                        self.base, size)


class LaplaceFamily(PowerFamily):
    r'''Polynomial solutions of :math:`\alpha w_n'' + w_n = z^n` for
    negative :math:`\alpha`, with the Laplace-type integral representation
    and the four-term recurrence.'''

    name = 'laplace'

    def __init__(self, alpha=-1.0):
        if not alpha < 0:
            raise DomainError('domain error: alpha must be negative')
        super().__init__(2, alpha)

    @property
    def params(self):
        return {'alpha': self._p.alpha}

    def poly(self, n):
        return laplace_family(self._p.alpha, n)

    def recurrence_pencil(self, size):
        return laplace_recurrence_pencil(self._p.alpha, size)


class ExpSumFamily(ClassicalFamily):
    r'''Polynomial solutions of :math:`y_n' - y_n = z^n`.'''

    name = 'expsum'

    @property
    def base(self):
        return MonomialSystem()

    @property
    def operator(self):
        return LinearDiffOp([-1, 1])

    def poly(self, n):
        return exp_sum_family(n)

    def recurrence_pencil(self, size):
        return genfun_recurrence_pencil((-1, 1), self.base, size)


class GenfunFamily(ClassicalFamily):
    r'''Family generated by :math:`f(w) \, e^{t u(w)}/p(u(w))` over a base
    system.

    Parameters
    ----------
    coeffs : sequence of float
        Coefficients of :math:`p` in ascending order, with :math:`p(0) \ne
        0`.
    system : str or GeneratingSystem
        Base system.

    '''

    name = 'genfun'

    def __init__(self, coeffs=(1.0,), system='monomials'):
        self._spec = GeneratingSpec(CPoly(coeffs), _system(system))

    @property
    def spec(self):
        return self._spec

    @property
    def params(self):
        return {'coeffs': tuple(self._spec.p.coeffs.real.tolist()),
                'system': self._spec.system.name}

    @property
    def base(self):
        return self._spec.system

    @property
    def operator(self):
        return self._spec.operator

    def poly(self, n):
        return genfun_family(self._spec, n)

    def recurrence_pencil(self, size):
        return genfun_recurrence_pencil(self._spec.p.coeffs, self.base, size)


class LiftedFamily(ClassicalFamily):
    r'''Lift of a base system through :math:`\alpha \, d^r + 1`.

    Each base polynomial :math:`g_n = \sum_j \xi_{n,j} z^j` is mapped to
    :math:`\sum_j \xi_{n,j} \, y_j(r, \alpha)`.

    '''

    name = 'lifted'

    def __init__(self, system='monomials', r=1, alpha=0.0):
        self._system = _system(system)
        self._p = FamilyParams(r, alpha)

    @property
    def family_params(self):
        return self._p

    @property
    def params(self):
        return {'system': self._system.name, 'r': self._p.r,
                'alpha': self._p.alpha}

    @property
    def base(self):
        return self._system

    @property
    def operator(self):
        return self._p.operator

    def poly(self, n):
        return lifted_family(coefficient_table(self._system, n), self._p, n)

    def recurrence_pencil(self, size):
        coeffs = [1.0] + [0.0]*(self._p.r-1) + [self._p.alpha]
        return genfun_recurrence_pencil(coeffs, self._system, size)


FAMILIES = {
    'monomials': MonomialFamily,
    'hermite': HermiteFamily,
    'power': PowerFamily,
    'laplace': LaplaceFamily,
    'expsum': ExpSumFamily,
    'genfun': GenfunFamily,
    'lifted': LiftedFamily,
    # short tags
    'y': PowerFamily,
    'w': LaplaceFamily,
    'example21': ExpSumFamily,
}
