# license: MIT
'''module for quadrature rules of the base measures'''

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import InsufficientRuleError

UNIT_CIRCLE = 'unit-circle'
HERMITE = 'real-line-hermite'
LAGUERRE = 'real-line-laguerre'
LEGENDRE = 'interval-legendre'


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    '''Nodes and positive weights realising a measure.

    For the unit circle, the rule integrates against :math:`d\\theta/2\\pi`
    and is exact for :math:`z^k \\bar{z}^m` with :math:`|k - m|` up to the
    exactness degree.  For the Gauss rules, the rule is exact for
    polynomials up to the exactness degree.

    '''

    domain: str
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int

    def __post_init__(self):
        for name in 'nodes', 'weights':
            a = np.array(getattr(self, name))
            a.flags.writeable = False
            object.__setattr__(self, name, a)

    def __len__(self):
        return len(self.nodes)

    def integrate(self, values):
        '''Integrate sampled values along the first axis.'''
        return np.tensordot(self.weights, values, axes=(0, 0))

    def is_exact(self, da, db) -> bool:
        '''Whether the rule integrates :math:`f \\bar{h}` exactly for
        polynomials of degrees ``da`` and ``db``.'''
        da, db = max(da, 0), max(db, 0)
        if self.domain == UNIT_CIRCLE:
            return max(da, db) <= self.exactness_degree
        return da + db <= self.exactness_degree

    def check_exact(self, da, db):
        if not self.is_exact(da, db):
            raise InsufficientRuleError(
                f'insufficient rule error: {self.domain} rule with '
                f'{len(self)} nodes is not exact for degrees {da} and {db}')


def unit_circle_rule(n):
    '''Equispaced rule for the normalised arc length on the unit circle.

    The nodes are the ``n``-th roots of unity, the weights are ``1/n``.

    '''
    if n < 1:
        raise ValueError('rule needs at least one node')
    nodes = np.exp(2j*np.pi*np.arange(n)/n)
    weights = np.full(n, 1/n)
    return QuadratureRule(UNIT_CIRCLE, nodes, weights, n-1)


def _jacobi_hermite(n):
    return np.zeros(n), np.sqrt(np.arange(1, n)/2), np.sqrt(np.pi)


def _jacobi_laguerre(n):
    return 2*np.arange(n) + 1., np.arange(1., n), 1.


def _jacobi_legendre(n):
    k = np.arange(1., n)
    return np.zeros(n), k/np.sqrt(4*k**2 - 1), 2.


_GAUSS_KINDS = {
    'hermite': (HERMITE, _jacobi_hermite),
    'laguerre': (LAGUERRE, _jacobi_laguerre),
    'legendre': (LEGENDRE, _jacobi_legendre),
}


def gauss_rule(kind, n):
    r'''Gauss rule of a classical weight.

    Nodes and weights are obtained from the eigen-decomposition of the
    Jacobi matrix of the three-term recurrence: the nodes are the
    eigenvalues, the weights are :math:`\mu_0 v_0^2` for normalised
    eigenvectors :math:`v`.

    Parameters
    ----------
    kind : str
        One of ``'hermite'`` (weight :math:`e^{-t^2}` on the real line),
        ``'laguerre'`` (weight :math:`e^{-t}` on the positive half-line),
        ``'legendre'`` (weight 1 on :math:`[-1, 1]`).
    n : int
        Number of nodes.

    Returns
    -------
    rule : QuadratureRule
        Rule exact for polynomials of degree :math:`2n-1`.

    '''
    try:
        domain, jacobi = _GAUSS_KINDS[kind]
    except KeyError:
        raise ValueError(f'unknown quadrature kind: {kind}') from None
    if n < 1:
        raise ValueError('rule needs at least one node')

    a, b, mu0 = jacobi(n)
    if n == 1:
        nodes, weights = a.copy(), np.array([mu0])
    else:
        nodes, v = eigh_tridiagonal(a, b)
        weights = mu0*v[0]**2
    return QuadratureRule(domain, nodes, weights, 2*n-1)
