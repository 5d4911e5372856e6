# license: MIT
'''module for classical-type Sobolev orthogonal polynomial families'''

from abc import ABCMeta, abstractmethod

from .diffop import solve_poly_ode
from .pencil import DiffPencil
from .polycore import poly_eval
from .sobolev import SobolevSpaceSpec, WeightFactor


class ClassicalFamily(metaclass=ABCMeta):
    r'''Interface for families of Sobolev orthogonal polynomials of
    classical type.

    A family is the sequence of polynomial solutions :math:`y_n` of
    :math:`D y_n = g_n`, where :math:`g_n` is a base orthogonal system and
    :math:`D` a differential operator that preserves degrees.  The family
    is orthogonal in the Sobolev space whose weight factor holds the
    coefficients of :math:`D`, and satisfies a differential pencil as well
    as a banded recurrence pencil.

    '''

    @classmethod
    def from_name(cls, name, **params):
        '''Construct one of the shipped families by its tag.'''
        from .catalogue import FAMILIES
        try:
            factory = FAMILIES[name]
        except KeyError:
            raise ValueError(f'unknown family: {name}') from None
        try:
            return factory(**params)
        except TypeError as exc:
            raise ValueError(f'invalid parameters for family {name}: '
                             f'{exc}') from None

    @classmethod
    def _implements(cls, name):
        '''Check whether subclass implements an abstract method.'''
        method = getattr(cls, name, None)
        if method is None:
            return False
        return not getattr(method, '__isabstractmethod__', False)

    @classmethod
    def _default_methods(cls):
        '''List available default methods.'''
        defaults = []
        for c in cls.__mro__:
            for name, value in vars(c).items():
                if name.startswith('_'):
                    parts = name[1:].split('_from_')
                    if len(parts) == 2:
                        method = parts[0]
                        requires = parts[1].split('_and_') if parts[1] else []
                        defaults.append((method, requires, value))
        return defaults

    def __init_subclass__(cls, **kwargs):
        '''Fill out a subclass with available default implementations.'''
        super().__init_subclass__(**kwargs)
        for method, requires, default in cls._default_methods():
            if not cls._implements(method) \
                    and all(map(cls._implements, requires)):
                setattr(cls, method, default)

    # default implementations are named _{method}_from_{requires}_and_...
    # and are tried from top to bottom

    @property
    def _params_from_(self):
        '''no parameters'''
        return {}

    def _poly_from_operator_and_base(self, n):
        '''solution of D y = g_n'''
        return solve_poly_ode(self.operator, self.base.poly(n))

    def _polys_from_poly(self, n_max):
        return [self.poly(n) for n in range(n_max+1)]

    def _value_from_poly(self, n, z):
        return poly_eval(self.poly(n), z)

    @property
    def _weight_from_operator(self):
        '''single column of the coefficients of D'''
        return WeightFactor.from_operator(self.operator)

    def _space_from_weight_and_base(self, n_max):
        '''base measure, exact up to degree n_max'''
        rule = self.base.rule(n_max + self.weight.max_degree)
        return SobolevSpaceSpec(rule, self.weight)

    def _norm_from_base(self, n):
        '''norm of g_n in the base measure'''
        return self.base.norm(n)

    @property
    def _diff_pencil_from_operator_and_base(self):
        '''R = R_0 D, S = S_0 D'''
        dp = self.base.diff_pencil
        return DiffPencil(dp.R @ self.operator, dp.S @ self.operator,
                          dp.eigenvalue)

    def _recurrence_pencil_from_(self, size):
        '''raises NotImplementedError'''
        raise NotImplementedError

    # end of default implementations

    @property
    @abstractmethod
    def name(self) -> str:
        '''Tag of the family.'''
        pass

    @property
    @abstractmethod
    def params(self) -> dict:
        '''Parameters of the family, by name.'''
        pass

    @property
    @abstractmethod
    def base(self):
        '''Base :class:`~sobolevop.systems.GeneratingSystem`.'''
        pass

    @property
    @abstractmethod
    def operator(self):
        '''Operator :math:`D` with :math:`D y_n = g_n`.'''
        pass

    @abstractmethod
    def poly(self, n):
        '''Polynomial :math:`y_n` of degree :math:`n`.'''
        pass

    @abstractmethod
    def polys(self, n_max):
        '''Polynomials :math:`y_0, \\ldots, y_{n_{\\max}}`.'''
        pass

    @abstractmethod
    def value(self, n, z):
        '''Value :math:`y_n(z)`.'''
        pass

    @property
    @abstractmethod
    def weight(self):
        '''Factor of the matrix weight of orthogonality.'''
        pass

    @abstractmethod
    def space(self, n_max):
        '''Sobolev space of orthogonality, exact for degrees up to
        ``n_max``.'''
        pass

    @abstractmethod
    def norm(self, n) -> float:
        '''Squared Sobolev norm :math:`A_n` of :math:`y_n`.'''
        pass

    @property
    @abstractmethod
    def diff_pencil(self):
        '''Differential pencil :math:`R y_n = \\lambda_n S y_n`.'''
        pass

    @abstractmethod
    def recurrence_pencil(self, size):
        '''Banded pencil :math:`L \\vec{y} = z M \\vec{y}` truncated at
        ``size``.'''
        pass

    def __repr__(self):
        args = ', '.join(f'{k}={v!r}' for k, v in self.params.items())
        return f'{type(self).__name__}({args})'
