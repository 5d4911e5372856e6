# license: MIT
'''module for operator pencils

A sequence of polynomials :math:`y_n` is a generalised eigenvector of a
differential pencil if :math:`R y_n = \\lambda_n S y_n` for differential
operators :math:`R, S` independent of :math:`n`, and of a banded pencil if
:math:`L \\vec{y}(z) = z M \\vec{y}(z)` for banded semi-infinite matrices
:math:`L, M`.

'''

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.sparse import dia_array
from scipy.special import factorial

from .diffop import LinearDiffOp, apply_op, apply_op_magnitude
from .errors import TruncationError
from .polycore import falling_factorial, poly_eval, relative_residual


class BandedMatrix:
    '''Square matrix in LAPACK banded storage.

    The entry :math:`A_{ij}` with :math:`-l \\le j - i \\le u` is stored as
    ``ab[u + i - j, j]``.

    Parameters
    ----------
    ab : array_like (l+u+1, N)
        Band storage.
    lower, upper : int
        Number of sub- and superdiagonals.

    '''

    __slots__ = ('_ab', '_lower', '_upper')

    def __init__(self, ab, lower, upper):
        ab = np.array(ab, dtype=complex)
        if ab.ndim != 2 or ab.shape[0] != lower + upper + 1:
            raise ValueError(f'band storage of shape {ab.shape} does not '
                             f'match bandwidths ({lower}, {upper})')
        ab.flags.writeable = False
        self._ab, self._lower, self._upper = ab, lower, upper

    @classmethod
    def from_entries(cls, size, lower, upper, entries):
        '''Build from ``(i, j, value)`` triples.

        Entries outside the ``size`` truncation are dropped; entries outside
        the band raise :class:`ValueError`.

        '''
        ab = np.zeros((lower+upper+1, size), dtype=complex)
        for i, j, v in entries:
            if not (0 <= i < size and 0 <= j < size):
                continue
            if not -lower <= j - i <= upper:
                raise ValueError(f'entry ({i}, {j}) outside of band '
                                 f'({lower}, {upper})')
            ab[upper+i-j, j] += v
        return cls(ab, lower, upper)

    @classmethod
    def from_dense(cls, a, lower, upper):
        a = np.asarray(a)
        n = len(a)
        i, j = np.nonzero(a)
        if np.any(j - i > upper) or np.any(i - j > lower):
            raise ValueError(f'matrix has entries outside of band '
                             f'({lower}, {upper})')
        return cls.from_entries(n, lower, upper, zip(i, j, a[i, j]))

    @property
    def size(self) -> int:
        return self._ab.shape[1]

    @property
    def shape(self):
        return (self.size, self.size)

    @property
    def lower(self) -> int:
        return self._lower

    @property
    def upper(self) -> int:
        return self._upper

    @property
    def ab(self):
        return self._ab

    def _dia(self):
        offsets = self._upper - np.arange(self._lower + self._upper + 1)
        return dia_array((self._ab, offsets), shape=self.shape)

    def to_dense(self):
        return self._dia().toarray()

    def dot(self, x):
        return self._dia() @ np.asarray(x)

    def abs(self):
        return BandedMatrix(np.abs(self._ab), self._lower, self._upper)

    def __repr__(self):
        return (f'BandedMatrix(size={self.size}, lower={self._lower}, '
                f'upper={self._upper})')


@dataclass(frozen=True, eq=False)
class BandedPencil:
    '''Truncated banded pencil :math:`(L, M)`.

    The relation is asserted from row ``first_row`` on.

    '''

    L: BandedMatrix
    M: BandedMatrix
    first_row: int = 0

    def __post_init__(self):
        if self.L.size != self.M.size:
            raise ValueError('pencil matrices must have equal size')

    @property
    def size(self) -> int:
        return self.L.size

    @property
    def upper(self) -> int:
        return max(self.L.upper, self.M.upper)

    @property
    def lower(self) -> int:
        return max(self.L.lower, self.M.lower)

    @property
    def interior_rows(self):
        '''Rows whose band lies within the truncation.'''
        return range(self.first_row, self.size - self.upper)


@dataclass(frozen=True, eq=False)
class DiffPencil:
    '''Differential pencil :math:`R y_n = \\lambda_n S y_n`.'''

    R: LinearDiffOp
    S: LinearDiffOp
    eigenvalue: Callable[[int], complex]

    def residual(self, y, n):
        return diff_pencil_residual(self, y, n)


def pencil_residual(pencil, polys, z):
    r'''Residual of :math:`L \vec{y}(z) = z M \vec{y}(z)` on interior rows.

    Each row is normalised by the magnitude of the terms it combines,
    :math:`\sum_j |L_{nj}| \tilde{y}_j(|z|) + |z| \sum_j |M_{nj}|
    \tilde{y}_j(|z|)`, where :math:`\tilde{y}_j` has the absolute
    coefficients of :math:`y_j`.

    Parameters
    ----------
    pencil : BandedPencil
        The pencil, of size :math:`T`.
    polys : sequence of CPoly
        At least :math:`T` polynomials :math:`y_0, y_1, \ldots`.
    z : array_like
        Sample points.

    Returns
    -------
    residual : float
        Largest normalised residual over interior rows and samples.

    '''
    size = pencil.size
    polys = list(polys)
    if len(polys) < size:
        raise TruncationError(f'truncation error: pencil of size {size} '
                              f'needs {size} polynomials, got {len(polys)}')
    rows = list(pencil.interior_rows)
    if not rows:
        return 0.0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    az = np.abs(z)
    y = np.array([poly_eval(p, z) for p in polys[:size]])
    ya = np.array([poly_eval(p.abs(), az).real for p in polys[:size]])
    res = np.abs(pencil.L.dot(y) - z*pencil.M.dot(y))[rows]
    scale = (pencil.L.abs().dot(ya) + az*pencil.M.abs().dot(ya)).real[rows]
    res = np.where(scale > 0, res/np.where(scale > 0, scale, 1), res)
    return float(res.max())


def diff_pencil_residual(dp, y, n):
    '''Coefficientwise relative residual of :math:`R y_n - \\lambda_n S
    y_n`.'''
    lam = dp.eigenvalue(n)
    scale = max(apply_op_magnitude(dp.R, y).max_abs,
                abs(lam)*apply_op_magnitude(dp.S, y).max_abs)
    return relative_residual(apply_op(dp.R, y), apply_op(dp.S, y)*lam, scale)


def genfun_recurrence_pencil(coeffs, system, size):
    r'''Banded pencil of a generating-function family.

    With :math:`\psi_m = \sum_k s^k c_k \varphi_{m-k}/(m-k)!` the
    polynomials of the base system divided by :math:`m!`, the base
    recurrence :math:`(m+1) \psi_{m+1} + b \psi_{m-1} = c \, t \, \psi_m`
    at :math:`m = n` gives row :math:`n`

    .. math::

        \sum_k s^k c_k \Big(\frac{n+1}{(n+1-k)!} \varphi_{n+1-k}
        + \frac{b}{(n-1-k)!} \varphi_{n-1-k}\Big)
        = t \sum_k \frac{c \, s^k c_k}{(n-k)!} \varphi_{n-k} \;,

    where terms with a negative index vanish.

    Parameters
    ----------
    coeffs : array_like
        Coefficients :math:`c_k` of :math:`p`.
    system : GeneratingSystem
        Base system, providing the scale :math:`s` of :math:`u(w) = s w` and
        the recurrence constants :math:`(b, c)`.
    size : int
        Truncation.

    '''
    c = np.asarray(coeffs, dtype=complex)
    d = len(c) - 1
    s = system.scale
    b, cc = system.recurrence
    lower = d + 1 if b else max(d - 1, 0)
    left, right = [], []
    for n in range(size):
        for k, ck in enumerate(c):
            if ck == 0:
                continue
            w = s**k*ck/factorial(n)
            left.append((n, n+1-k, w*falling_factorial(n+1, k)))
            if b:
                left.append((n, n-1-k, b*w*falling_factorial(n, k+1)))
            right.append((n, n-k, cc*w*falling_factorial(n, k)))
    return BandedPencil(BandedMatrix.from_entries(size, lower, 1, left),
                        BandedMatrix.from_entries(size, d, 0, right))


def laplace_recurrence_pencil(alpha, size):
    r'''Banded pencil of the four-term recurrence

    .. math::

        w_{n+1} + \alpha n(n+1) w_{n-1} = z (w_n + \alpha (n-1) n w_{n-2})
        \;.

    '''
    left, right = [], []
    for n in range(size):
        left += [(n, n+1, 1.), (n, n-1, alpha*n*(n+1))]
        right += [(n, n, 1.), (n, n-2, alpha*(n-1)*n)]
    return BandedPencil(BandedMatrix.from_entries(size, 1, 1, left),
                        BandedMatrix.from_entries(size, 2, 0, right))


def pencil_from_recurrence(family, size, **params):
    '''Banded pencil of a family given by instance or by name.'''
    from .classical import ClassicalFamily
    if not isinstance(family, ClassicalFamily):
        family = ClassicalFamily.from_name(family, **params)
    try:
        return family.recurrence_pencil(size)
    except NotImplementedError:
        raise ValueError(f'no recurrence pencil for family: {family.name}') \
            from None


def family_pencils(family, size):
    '''The differential pencil and the banded pencil of a family.'''
    return family.diff_pencil, pencil_from_recurrence(family, size)
