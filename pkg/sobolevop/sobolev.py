# license: MIT
'''module for matrix-weight Sobolev inner products

The Sobolev inner product of two polynomials is

.. math::

    \\langle f, h \\rangle = \\int (f, f', \\ldots, f^{(\\rho)}) \\, M_0 \\,
                            (h, h', \\ldots, h^{(\\rho)})^* \\, d\\mu \\;,

where :math:`\\mu` is a scalar measure realised by a
:class:`~sobolevop.quadrature.QuadratureRule`.  If the matrix weight is
given by a polynomial factor :math:`M_0 = G G^*`, the inner product reduces
to a plain :math:`L^2(\\mu)` inner product of the vectors
:math:`g_{f;k} = \\sum_l g_{l,k} f^{(l)}`.

'''

import logging
from dataclasses import dataclass
from numbers import Number
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateFormError, DomainError, TruncationError, \
    UnsupportedShapeError
from .polycore import CPoly, poly_derivative, poly_eval
from .quadrature import QuadratureRule

logger = logging.getLogger(__name__)


def _as_poly(value):
    if isinstance(value, CPoly):
        return value
    if isinstance(value, Number):
        return CPoly([value])
    return CPoly(value)


class WeightFactor:
    '''Polynomial factor :math:`G` of a matrix weight :math:`M_0 = G G^*`.

    Parameters
    ----------
    entries : sequence of sequences
        Table of entries :math:`g_{l,k}` with rows :math:`l = 0, \\ldots,
        \\rho` (derivative order) and columns :math:`k = 0, \\ldots,
        \\beta`.

    '''

    __slots__ = ('_g',)

    def __init__(self, entries):
        rows = [[_as_poly(e) for e in row] for row in entries]
        if not rows or not rows[0] or \
                any(len(row) != len(rows[0]) for row in rows):
            raise ValueError('weight factor needs a nonempty rectangular '
                             'table of entries')
        self._g = tuple(map(tuple, rows))

    @classmethod
    def from_column(cls, polys):
        '''Single-column factor :math:`(g_0, \\ldots, g_\\rho)^T`.'''
        return cls([[p] for p in polys])

    @classmethod
    def from_operator(cls, D):
        '''Single-column factor of the coefficients of an operator.

        The induced map is :math:`f \\mapsto D f`.

        '''
        return cls.from_column(D.coeffs)

    @classmethod
    def from_matrix(cls, matrix, tol=1e-12):
        '''Constant factor of a constant nonnegative Hermitian matrix.

        Uses the Hermitian square root; eigenvalues below ``tol*trace`` are
        dropped, so that the factor has as many columns as the rank.

        '''
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError('matrix weight must be square')
        if not np.allclose(m, m.conj().T, rtol=0, atol=tol*np.abs(m).max()):
            raise DomainError('domain error: matrix weight is not Hermitian')
        val, vec = np.linalg.eigh(m)
        cut = tol*max(val.sum(), 0)
        if val[0] < -cut:
            raise DomainError('domain error: matrix weight is not '
                              'nonnegative')
        keep = val > cut
        g = vec[:, keep]*np.sqrt(val[keep])
        return cls([[CPoly([x]) for x in row] for row in g])

    @property
    def rho(self) -> int:
        '''Highest derivative order.'''
        return len(self._g) - 1

    @property
    def beta(self) -> int:
        '''Index of the last column.'''
        return len(self._g[0]) - 1

    @property
    def entries(self):
        return self._g

    @property
    def max_degree(self) -> int:
        return max(max(e.degree, 0) for row in self._g for e in row)

    def column(self, k):
        return tuple(row[k] for row in self._g)

    def values(self, z):
        '''Sampled factor :math:`G(z)` of shape ``z.shape + (rho+1,
        beta+1)``.'''
        z = np.asarray(z)
        out = np.empty(z.shape + (self.rho+1, self.beta+1), dtype=complex)
        for l, row in enumerate(self._g):
            for k, g in enumerate(row):
                out[..., l, k] = poly_eval(g, z)
        return out

    def m0(self, z):
        '''Sampled matrix weight :math:`M_0(z) = G(z) G(z)^*`.'''
        g = self.values(z)
        return g @ np.conj(np.swapaxes(g, -1, -2))

    def __repr__(self):
        return f'WeightFactor({[list(row) for row in self._g]!r})'


def factor_map(weight, f):
    r'''Map a polynomial to its factor vector.

    Computes :math:`g_{f;k} = \sum_{l=0}^{\rho} g_{l,k} \, f^{(l)}` for
    :math:`k = 0, \ldots, \beta` at the coefficient level.

    '''
    ders = [poly_derivative(f, l) for l in range(weight.rho+1)]
    out = []
    for k in range(weight.beta+1):
        g = CPoly()
        for l, d in enumerate(ders):
            g = g + weight.entries[l][k]*d
        out.append(g)
    return out


@dataclass(frozen=True, eq=False)
class SobolevSpaceSpec:
    '''A Sobolev inner product realised by quadrature.

    Either a polynomial ``weight`` factor or a dense matrix function ``m0``
    must be given.  The matrix function takes an array of nodes of shape
    ``(N,)`` and returns an array of shape ``(N, rho+1, rho+1)``; its
    entries are assumed to be polynomials of degree at most
    ``weight_degree`` in :math:`z` and :math:`\\bar{z}`.

    '''

    rule: QuadratureRule
    weight: Optional[WeightFactor] = None
    m0: Optional[Callable] = None
    rho: Optional[int] = None
    weight_degree: int = 0

    def __post_init__(self):
        if self.weight is not None:
            object.__setattr__(self, 'rho', self.weight.rho)
            object.__setattr__(self, 'weight_degree', self.weight.max_degree)
        elif self.m0 is None:
            raise ValueError('Sobolev space needs a weight factor or a '
                             'matrix weight')
        elif self.rho is None:
            raise ValueError('matrix weight needs the derivative order rho')

    @classmethod
    def from_matrix(cls, matrix, rule):
        '''Dense space of a constant matrix weight.'''
        m = np.asarray(matrix, dtype=complex)
        def m0(z):
            return np.broadcast_to(m, np.shape(z) + m.shape)
        return cls(rule, m0=m0, rho=len(m)-1)

    @property
    def has_factor(self) -> bool:
        return self.weight is not None

    def dense(self):
        '''The same inner product through the dense matrix weight.'''
        if self.weight is None:
            return self
        return SobolevSpaceSpec(self.rule, m0=self.weight.m0, rho=self.rho,
                                weight_degree=self.weight_degree)

    def check_exact(self, da, db):
        d = self.weight_degree
        self.rule.check_exact(max(da, 0) + d, max(db, 0) + d)


def _derivative_values(f, rho, z):
    return np.stack([poly_eval(poly_derivative(f, l), z)
                     for l in range(rho+1)], axis=-1)


def _samples(spec, f):
    '''Factor vector of ``f`` sampled at the nodes and scaled by the square
    root of the weights, as an array of shape (columns, nodes).'''
    rule = spec.rule
    sw = np.sqrt(rule.weights)
    if spec.weight is not None:
        gs = factor_map(spec.weight, f)
        return np.array([poly_eval(g, rule.nodes)
                         for g in gs])*sw
    # pointwise Hermitian square root of the dense weight
    val, vec = np.linalg.eigh(spec.m0(rule.nodes))
    fac = vec*np.sqrt(np.clip(val, 0, None))[..., np.newaxis, :]
    v = _derivative_values(f, spec.rho, rule.nodes)
    return np.einsum('ni,nij->jn', v, fac)*sw


def sobolev_inner(spec, f, h):
    r'''Sobolev inner product of two polynomials.

    With a weight factor, computes :math:`\sum_k \int g_{f;k} \,
    \overline{g_{h;k}} \, d\mu`.  With a dense matrix weight, computes the
    sandwich of derivative vectors pointwise.

    Raises
    ------
    InsufficientRuleError
        If the rule is not exact for the integrand.

    '''
    spec.check_exact(f.degree, h.degree)
    rule = spec.rule
    if spec.weight is not None:
        gf = factor_map(spec.weight, f)
        gh = factor_map(spec.weight, h)
        vals = sum(poly_eval(a, rule.nodes)*np.conj(poly_eval(b, rule.nodes))
                   for a, b in zip(gf, gh))
        return complex(rule.integrate(vals))
    vf = _derivative_values(f, spec.rho, rule.nodes)
    vh = _derivative_values(h, spec.rho, rule.nodes)
    vals = np.einsum('ni,nij,nj->n', vf, spec.m0(rule.nodes), np.conj(vh))
    return complex(rule.integrate(vals))


def gram_matrix(spec, polys):
    '''Matrix of Sobolev inner products of a sequence of polynomials.'''
    polys = list(polys)
    if not polys:
        return np.zeros((0, 0), dtype=complex)
    d = max(p.degree for p in polys)
    spec.check_exact(d, d)
    s = np.array([_samples(spec, p) for p in polys])
    return np.einsum('ikq,jkq->ij', s, np.conj(s))


def check_positivity(spec, n_max, basis=None):
    '''Check that the Sobolev form is positive definite on polynomials of
    degree up to ``n_max``.

    The Gram matrix of the ``basis`` (monomials by default) is scaled to unit
    diagonal and factorised by Cholesky.  Pivot ``k`` is the Schur
    complement of the leading block of degree ``k`` and must exceed the
    rounding level of the factorisation.

    Returns
    -------
    eigenvalues : array_like
        Eigenvalues of the full scaled Gram matrix.

    Raises
    ------
    DegenerateFormError
        Naming the first degree at which positivity fails.

    '''
    from scipy.linalg import get_lapack_funcs

    if basis is None:
        basis = [CPoly.monomial(k) for k in range(n_max+1)]
    g = gram_matrix(spec, list(basis)[:n_max+1])
    d = g.diagonal().real
    bad = np.flatnonzero(d <= 0)
    if bad.size:
        raise DegenerateFormError(int(bad[0]), 'vanishing diagonal')
    s = 1/np.sqrt(d)
    g = s[:, np.newaxis]*g*s[np.newaxis, :]
    potrf, = get_lapack_funcs(('potrf',), (g,))
    c, info = potrf(g, lower=True)
    if info > 0:
        raise DegenerateFormError(info-1, 'Cholesky factorisation breaks '
                                  'down')
    pivots = np.abs(c.diagonal())**2
    bad = np.flatnonzero(pivots <= len(g)*np.finfo(float).eps)
    if bad.size:
        k = int(bad[0])
        raise DegenerateFormError(k, f'Cholesky pivot {pivots[k]:.3g}')
    return np.linalg.eigvalsh(g)


def gram_schmidt(spec, n_max, basis=None):
    r'''Sobolev orthogonal polynomials by Gram–Schmidt orthogonalisation.

    Orthogonalises a degree-graded ``basis`` (monomials by default) with
    modified Gram–Schmidt and one pass of re-orthogonalisation.  The sampled
    factor vectors are orthogonalised while the polynomial coefficients are
    carried along.

    Parameters
    ----------
    spec : SobolevSpaceSpec
        Sobolev inner product.
    n_max : int
        Highest degree.
    basis : sequence of CPoly, optional
        Polynomials whose ``k``-th entry has degree ``k``.

    Returns
    -------
    polys : list of CPoly
        Monic orthogonal polynomials of degrees ``0, ..., n_max``.

    Raises
    ------
    DegenerateFormError
        If the form is not positive definite up to degree ``n_max``.

    '''
    n = n_max + 1
    if basis is None:
        basis = [CPoly.monomial(k) for k in range(n)]
    basis = list(basis)
    if len(basis) < n:
        raise TruncationError(f'truncation error: basis has {len(basis)} '
                              f'polynomials, needs {n}')
    basis = basis[:n]
    for k, p in enumerate(basis):
        if p.degree != k:
            raise ValueError(f'basis polynomial {k} has degree {p.degree}')

    check_positivity(spec, n_max, basis)

    qs, cs, norms = [], [], []
    for k, p in enumerate(basis):
        v = _samples(spec, p).ravel()
        c = p.padded(n)
        for _ in range(2):
            for q, cq, a in zip(qs, cs, norms):
                t = np.vdot(q, v)/a
                v = v - t*q
                c = c - t*cq
        lead = c[k]
        v, c = v/lead, c/lead
        a = np.vdot(v, v).real
        logger.debug('gram-schmidt degree %d: norm %.6e', k, a)
        if not a > 0:
            raise DegenerateFormError(k)
        qs.append(v)
        cs.append(c)
        norms.append(a)
    return [CPoly(c) for c in cs]


def extend_weight(weight, column=0):
    r'''Extend a single-column weight factor by the derivative of its map.

    For :math:`G = (g_0, \ldots, g_\rho)^T` returns the factor
    :math:`\tilde{G}` of shape :math:`(\rho+2) \times 2` whose first column
    is :math:`G` padded by zero and whose second column is :math:`(d_0,
    \ldots, d_\rho, g_\rho)^T` with :math:`d_l = g_l' + g_{l-1}`.  The map
    of the second column is :math:`f \mapsto (g_{f;0})'`, so that the
    extended form adds :math:`\langle g_{f;0}', g_{h;0}' \rangle_\mu` to
    the original one.

    Raises
    ------
    UnsupportedShapeError
        If the factor has more than one column.

    '''
    if weight.beta != 0 or column != 0:
        raise UnsupportedShapeError('unsupported shape error: weight '
                                    'extension needs a single-column factor')
    g = weight.column(0)
    rho = weight.rho
    rows = []
    for l in range(rho+1):
        d = poly_derivative(g[l], 1)
        if l > 0:
            d = d + g[l-1]
        rows.append([g[l], d])
    rows.append([CPoly(), g[rho]])
    return WeightFactor(rows)


def derivative_gram(weight, rule, polys, column=0):
    r'''Gram matrix of the derivatives :math:`g_{f;k}'` of the factor map.

    Its diagonal holds the norm increments of the extended weight.

    '''
    ders = [poly_derivative(factor_map(weight, p)[column], 1) for p in polys]
    if not ders:
        return np.zeros((0, 0), dtype=complex)
    d = max(x.degree for x in ders)
    rule.check_exact(d, d)
    v = np.array([poly_eval(x, rule.nodes) for x in ders])
    v = v*np.sqrt(rule.weights)
    return v @ v.conj().T
