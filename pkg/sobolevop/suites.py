# license: MIT
'''module for the verification suites and their reports

Each suite checks one kind of identity for a family of Sobolev orthogonal
polynomials and returns a list of :class:`CheckRecord` entries, collected in
a :class:`Report`.  The :func:`run_all` function runs suites over parameter
grids read from an INI configuration.

'''

import configparser
import itertools
import json
import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy.integrate import quad
from scipy.special import factorial

from .catalogue import LaplaceFamily, LiftedFamily, PowerFamily
from .classical import ClassicalFamily
from .diffop import apply_op, apply_op_magnitude
from .errors import PreconditionError, SobolevopError, UnsupportedShapeError
from .families import FamilyParams, GeneratingSpec, asymptotic_error, \
    asymptotic_limit, check_root_location, coefficient_table, \
    genfun_contour, genfun_family, genfun_generating_coeffs, \
    laplace_generating_coeffs, laplace_identity_residual, laplace_integral, \
    laplace_recurrence_residual, lifted_integral, mixed_relation_residual, \
    scaled_power_family
from .pencil import pencil_from_recurrence, pencil_residual
from .polycore import falling_factorial, poly_eval, relative_residual
from .sobolev import SobolevSpaceSpec, derivative_gram, extend_weight, \
    gram_matrix, gram_schmidt
from .systems import HermiteSystem, MonomialSystem

logger = logging.getLogger(__name__)

#: note of records for claims whose preconditions do not hold
SKIPPED = 'precondition not met'

DEFAULT_NMAX = 12


@dataclass
class CheckRecord:
    '''Outcome of a single check.'''

    id: str
    ref: str
    residual: Optional[float]
    tol: float
    passed: bool
    note: str = ''

    def to_dict(self):
        return {'id': self.id, 'paper_ref': self.ref,
                'residual': self.residual, 'tol': self.tol,
                'pass': self.passed, 'note': self.note}

    @classmethod
    def from_dict(cls, d):
        ref = d['paper_ref'] if 'paper_ref' in d else d['ref']
        return cls(d['id'], ref, d['residual'], d['tol'], d['pass'],
                   d.get('note', ''))


@dataclass
class Report:
    '''Outcome of a suite, or of a collection of suites.

    The report passes if and only if every check passes.

    '''

    suite: str
    params: dict
    checks: List[CheckRecord] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        params = {k: list(v) if isinstance(v, tuple) else v
                  for k, v in self.params.items()}
        return {'suite': self.suite, 'params': params,
                'checks': [c.to_dict() for c in self.checks],
                'pass': self.passed, 'seconds': self.seconds}

    @classmethod
    def from_dict(cls, d):
        return cls(d['suite'], dict(d['params']),
                   [CheckRecord.from_dict(c) for c in d['checks']],
                   d['seconds'])

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _record(id, ref, residual, tol, tol_scale):
    residual = float(residual)
    tol = tol*tol_scale
    passed = bool(residual <= tol)
    if not passed:
        logger.warning('check %s failed: residual %.3e > tol %.3e',
                       id, residual, tol)
    return CheckRecord(id, ref, residual, tol, passed)


def _skipped(id, ref, note=SKIPPED):
    return CheckRecord(id, ref, None, 0.0, True, note)


def _points(rng, count, radius):
    '''Random points in the closed disc of the given radius.'''
    r = radius*np.sqrt(rng.uniform(size=count))
    return r*np.exp(2j*np.pi*rng.uniform(size=count))


def _magnitude(p, z):
    '''Value at :math:`|z|` of the polynomial with absolute coefficients.'''
    return poly_eval(p.abs(), np.abs(z)).real


def _deviation(g, target, norms):
    '''Largest entry of |g - target| relative to the geometric mean of the
    norms of its row and column.'''
    a = np.sqrt(np.asarray(norms, dtype=float))
    return float(np.max(np.abs(g - target)/np.outer(a, a)))


SUITES = {}


def suite(name):
    '''Register a suite function under the given name.'''
    def register(func):
        SUITES[name] = func
        return func
    return register


@suite('orthogonality')
def check_orthogonality(family, n_max, rng, tol_scale=1.0):
    '''Sobolev Gram matrix of the family against the base norms.'''
    polys = family.polys(n_max)
    norms = [family.norm(n) for n in range(n_max+1)]
    g = gram_matrix(family.space(n_max), polys)
    checks = [
        _record('orthogonality', 'Gram matrix equals diag(A_n)',
                _deviation(g, np.diag(norms), norms), 1e-9, tol_scale),
        _record('hermitian', 'Gram matrix is Hermitian',
                _deviation(g, g.conj().T, norms),
                1e-12, tol_scale),
    ]
    if isinstance(family.base, HermiteSystem):
        err = 0.0
        for n in range(min(n_max, 12) + 1):
            h = family.base.poly(n)
            val, _ = quad(lambda t: poly_eval(h, t).real**2*np.exp(-t*t),
                          -np.inf, np.inf, epsabs=0, epsrel=1e-12, limit=200)
            err = max(err, abs(val - family.norm(n))/family.norm(n))
        checks.append(_record('base-norm', 'A_n equals integral of '
                              'H_n^2 exp(-t^2)', err, 1e-7, tol_scale))
    return checks


@suite('recurrence')
def check_recurrence(family, n_max, rng, tol_scale=1.0):
    '''Banded recurrence of the family and the identities of the power and
    Laplace families.'''
    checks = []
    try:
        pencil = pencil_from_recurrence(family, n_max+1)
    except ValueError:
        checks.append(_skipped('recurrence', 'L y(z) = z M y(z)',
                               'no recurrence pencil'))
    else:
        res = pencil_residual(pencil, family.polys(n_max),
                              _points(rng, 5, 2.0))
        checks.append(_record('recurrence', 'L y(z) = z M y(z)', res, 1e-9,
                              tol_scale))
    if isinstance(family, PowerFamily):
        p = family.family_params
        res = max(mixed_relation_residual(p, n) for n in range(n_max+1))
        checks.append(_record('mixed-relation', 'D y_{n+1} = z D y_n', res,
                              1e-10, tol_scale))
    if isinstance(family, LaplaceFamily):
        alpha = family.family_params.alpha
        res = max(laplace_recurrence_residual(alpha, n)
                  for n in range(n_max+1))
        checks.append(_record('four-term', 'four-term recurrence of w_n',
                              res, 1e-10, tol_scale))
        res = max(laplace_identity_residual(alpha, n)
                  for n in range(n_max+1))
        checks.append(_record('monomial-identity', 'w_n - n(n-1)/beta^2 '
                              'w_{n-2} = z^n', res, 1e-10, tol_scale))
    return checks


@suite('ode')
def check_ode(family, n_max, rng, tol_scale=1.0):
    '''Defining equation and differential pencil of the family.'''
    D = family.operator
    dp = family.diff_pencil
    tol = 1e-10 if isinstance(family, PowerFamily) else 1e-9
    eq, pen = 0.0, 0.0
    for n in range(n_max+1):
        y = family.poly(n)
        eq = max(eq, relative_residual(apply_op(D, y), family.base.poly(n),
                                       apply_op_magnitude(D, y).max_abs))
        pen = max(pen, dp.residual(y, n))
    checks = [
        _record('defining-equation', 'D y_n = g_n', eq, tol, tol_scale),
        _record('differential-pencil', 'R y_n = lambda_n S y_n', pen, tol,
                tol_scale),
    ]
    if isinstance(family, LiftedFamily):
        spec = GeneratingSpec(D.constant_coeffs(), family.base)
        res = max(relative_residual(family.poly(n), genfun_family(spec, n))
                  for n in range(n_max+1))
        checks.append(_record('lift-equivalence', 'lift equals generating '
                              'function family', res, 1e-9, tol_scale))
    return checks


@suite('generating')
def check_generating(family, n_max, rng, tol_scale=1.0):
    '''Taylor coefficients of the generating function against the family.'''
    ref = 'f(w) exp(t u(w))/p(u(w)) generates y_n(t)/n!'
    if not family.operator.is_constant:
        return [_skipped('generating', ref, 'operator is not constant')]
    spec = GeneratingSpec(family.operator.constant_coeffs(), family.base)
    b = np.abs(spec.reciprocal_series(n_max+1).coeffs)
    base = family.base.polys(n_max)
    polys = family.polys(n_max)
    laplace = isinstance(family, LaplaceFamily)
    err, lap = 0.0, 0.0
    for t in _points(rng, 5, 2.0):
        coeffs = genfun_generating_coeffs(spec, t, n_max+1)
        if laplace:
            lcoeffs = laplace_generating_coeffs(family.family_params.alpha,
                                                t, n_max+1)
        for n, y in enumerate(polys):
            value = poly_eval(y, t)/factorial(n)
            scale = sum(falling_factorial(n, j)*b[j]
                        * _magnitude(base[n-j], t) for j in range(n+1))
            scale = max(scale/factorial(n), _magnitude(y, t)/factorial(n))
            err = max(err, abs(coeffs[n] - value)/scale)
            if laplace:
                lap = max(lap, abs(lcoeffs[n] - value)/scale)
    checks = [_record('generating', ref, err, 1e-10, tol_scale)]
    if laplace:
        checks.append(_record('laplace-generating', 'exp(tz)/(1 + alpha z^2) '
                              'generates w_n(t)/n!', lap, 1e-10, tol_scale))
    return checks


@suite('integral-rep')
def check_integral_rep(family, n_max, rng, tol_scale=1.0):
    '''Integral and contour representations of the family.'''
    checks = []
    polys = family.polys(n_max)
    t = _points(rng, 5, 2.0)
    alpha = getattr(getattr(family, 'family_params', None), 'alpha', 0.0)
    r = getattr(getattr(family, 'family_params', None), 'r', 0)
    if r == 2 and alpha < 0:
        if isinstance(family, LiftedFamily):
            xi = coefficient_table(family.base, n_max)
            rep, ref = (lambda n: lifted_integral(xi, alpha, n, t),
                        'Laplace-type integral of the lifted family')
        else:
            rep, ref = (lambda n: laplace_integral(alpha, n, t),
                        'Laplace-type integral of w_n')
        err = max(np.max(np.abs(rep(n) - poly_eval(y, t))
                         / np.maximum(_magnitude(y, t), 1e-300))
                  for n, y in enumerate(polys))
        checks.append(_record('laplace-integral', ref, err, 1e-7, tol_scale))

    ref = 'contour integral of the generating function'
    if not family.operator.is_constant:
        checks.append(_skipped('contour', ref, 'operator is not constant'))
        return checks
    spec = GeneratingSpec(family.operator.constant_coeffs(), family.base)
    radius = spec.singular_radius
    radius = 0.5*radius if np.isfinite(radius) else 1.0
    err = 0.0
    for n, y in enumerate(polys):
        value, mag = genfun_contour(spec, n, t, radius, magnitude=True)
        scale = np.maximum(_magnitude(y, t), mag)
        err = max(err, np.max(np.abs(value - poly_eval(y, t))/scale))
    checks.append(_record('contour', ref, err, 1e-8, tol_scale))
    return checks


@suite('roots')
def check_roots(family, n_max, rng, tol_scale=1.0):
    '''Forced zeros at the origin and all other roots outside the unit
    disc.'''
    ref = 'roots of y_n(r, alpha) for alpha <= -1'
    if not isinstance(family, PowerFamily):
        return [_skipped('roots', ref, 'not a power family')]
    try:
        reports = [check_root_location(family.family_params, n)
                   for n in range(n_max+1)]
    except PreconditionError:
        return [_skipped('roots', ref)]
    zeros = max(abs(rep.zero_count - rep.expected_zero_count)
                for rep in reports)
    modulus = max(max(0.0, 1 - rep.min_modulus) for rep in reports)
    return [
        _record('forced-zeros', 'zero of multiplicity n mod r at the origin',
                zeros, 0.0, tol_scale),
        _record('root-modulus', 'nonzero roots satisfy |z| >= 1', modulus,
                1e-8, tol_scale),
    ]


def _asymptotic_grid():
    radii = np.linspace(0.2, 1.0, 5)
    angles = 2*np.pi*np.arange(5)/5
    return (radii[:, np.newaxis]*np.exp(1j*angles)).ravel()


@suite('asymptotics')
def check_asymptotics(family, n_max, rng, tol_scale=1.0):
    '''Convergence of the rescaled power family to its limit.'''
    ref = 'alpha_r^n/n! y_n(z) converges along n = rm + l'
    if not isinstance(family, PowerFamily) \
            or family.family_params.alpha == 0:
        return [_skipped('asymptotics', ref)]
    p = family.family_params
    z = _asymptotic_grid()
    x = np.abs(p.alpha_r*z)
    unit = FamilyParams(p.r, -1.0)
    scaled, rise, final = 0.0, 0.0, 0.0
    for l in range(p.r):
        limit = np.abs(asymptotic_limit(p, l, z)).max()
        floor = 1e-15*max(1.0, limit)
        errs = [asymptotic_error(p, l, m, z) for m in range(5, 31)]
        rise = max([rise] + [b - a - floor for a, b in zip(errs, errs[1:])])
        final = max(final, errs[-1]/max(1.0, limit))
        for m in range((n_max - l)//p.r + 1):
            n = p.r*m + l
            value = p.alpha_r**n/factorial(n)*family.value(n, z)
            partial = scaled_power_family(p, l, m, z)
            mag = np.abs(scaled_power_family(unit, l, m, x))
            scaled = max(scaled, np.max(np.abs(value - partial)/mag))
    return [
        _record('scaled-family', 'alpha_r^n/n! y_n(z) is a partial sum',
                scaled, 1e-10, tol_scale),
        _record('monotone', 'asymptotic error is non-increasing in m', rise,
                0.0, tol_scale),
        _record('limit', 'asymptotic error at m = 30', final, 1e-10,
                tol_scale),
    ]


@suite('extension')
def check_extension(family, n_max, rng, tol_scale=1.0):
    '''Extension of the weight factor by the derivative of its map.'''
    ref = 'extended weight adds the derivative norms B_n'
    try:
        ext = extend_weight(family.weight)
    except UnsupportedShapeError:
        return [_skipped('extension', ref, 'weight has several columns')]
    polys = family.polys(n_max)
    rule = family.base.rule(n_max + ext.max_degree)
    norms = np.array([family.norm(n) for n in range(n_max+1)])
    b = derivative_gram(family.weight, rule, polys)
    bn = b.diagonal().real
    total = norms + bn
    g = gram_matrix(SobolevSpaceSpec(rule, ext), polys)
    checks = [
        _record('derivative-gram', 'derivatives of the factor map are '
                'orthogonal', _deviation(b, np.diag(bn), total), 1e-9,
                tol_scale),
        _record('extension', ref, _deviation(g, np.diag(total), total), 1e-9,
                tol_scale),
    ]
    if isinstance(family.base, MonomialSystem):
        n = np.arange(n_max+1)
        checks.append(_record('derivative-norms', 'B_n = n^2 on the unit '
                              'circle', np.max(np.abs(bn - n**2)/(1 + n**2)),
                              1e-9, tol_scale))
    return checks


@suite('pencil')
def check_pencil(family, n_max, rng, tol_scale=1.0):
    '''Both pencil properties of the family.'''
    dp = family.diff_pencil
    res = max(dp.residual(family.poly(n), n) for n in range(n_max+1))
    checks = [_record('differential-pencil', 'R y_n = lambda_n S y_n', res,
                      1e-9, tol_scale)]
    try:
        pencil = pencil_from_recurrence(family, n_max+1)
    except ValueError:
        checks.append(_skipped('banded-pencil', 'L y(z) = z M y(z)',
                               'no recurrence pencil'))
    else:
        res = pencil_residual(pencil, family.polys(n_max),
                              _points(rng, 5, 2.0))
        checks.append(_record('banded-pencil', 'L y(z) = z M y(z)', res, 1e-9,
                              tol_scale))
    return checks


def _monic(p):
    return p/p.leading


@suite('gram-schmidt')
def check_gram_schmidt(family, n_max, rng, tol_scale=1.0):
    '''Gram-Schmidt orthogonalisation reproduces the monic family.'''
    space = family.space(n_max)
    basis = [_monic(g) for g in family.base.polys(n_max)]
    qs = gram_schmidt(space, n_max, basis)
    res = max(relative_residual(q, _monic(y))
              for q, y in zip(qs, family.polys(n_max)))
    again = gram_schmidt(space, n_max, qs)
    idem = max(relative_residual(a, q) for a, q in zip(again, qs))
    return [
        _record('gram-schmidt', 'orthogonalisation reproduces the monic '
                'family', res, 1e-8, tol_scale),
        _record('idempotent', 'orthogonalisation of an orthogonal basis',
                idem, 1e-8, tol_scale),
    ]


def family_from_params(params):
    '''Construct the family named by the ``family`` key of a parameter
    dictionary.'''
    params = dict(params)
    params.pop('nmax', None)
    name = params.pop('family', 'power')
    return ClassicalFamily.from_name(name, **params)


def run_suite(name, params, seed=0, tol_scale=1.0):
    '''Run a single suite for the family given by ``params``.

    Parameters
    ----------
    name : str
        Name of the suite.
    params : dict
        Family tag, family parameters, and ``nmax``.
    seed : int, optional
        Seed of the random sample points.
    tol_scale : float, optional
        Factor applied to every tolerance.

    Returns
    -------
    report : Report
        The outcome of the suite.

    Raises
    ------
    ValueError
        If the suite or the family is unknown, or the parameters are
        invalid.

    '''
    try:
        func = SUITES[name]
    except KeyError:
        raise ValueError(f'unknown suite: {name}') from None
    family = family_from_params(params)
    n_max = int(params.get('nmax', DEFAULT_NMAX))
    rng = np.random.default_rng(seed)
    logger.info('running suite %s for %r, nmax = %d', name, family, n_max)
    start = time.perf_counter()
    try:
        checks = func(family, n_max, rng, tol_scale)
    except (PreconditionError, UnsupportedShapeError) as exc:
        checks = [_skipped(name, str(exc))]
    except SobolevopError as exc:
        logger.warning('suite %s failed: %s', name, exc)
        checks = [CheckRecord(name, 'suite raised an error', None, 0.0,
                              False, str(exc))]
    seconds = time.perf_counter() - start
    report = Report(name, dict(params, nmax=n_max), checks, seconds)
    logger.info('suite %s: %s in %.2fs', name,
                'pass' if report.passed else 'FAIL', seconds)
    return report


DEFAULT_CONFIG = '''
[run]
seed = 20221009
tol_scale = 1.0

[orthogonality]
family = power
r = 1, 2, 3
alpha = 1, -1, 0.5

[orthogonality.others]
family = monomials, hermite, expsum, laplace

[orthogonality.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0 -0.5
nmax = 10

[orthogonality.lifted]
family = lifted
system = monomials, hermite
r = 1, 2
alpha = -1, 0.5
nmax = 10

[recurrence]
family = power
r = 1, 2, 3
alpha = -1, 0.5
nmax = 20

[recurrence.laplace]
family = laplace
alpha = -1, -0.25
nmax = 20

[recurrence.others]
family = monomials, hermite, expsum
nmax = 15

[recurrence.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0.5 0 0.25
nmax = 15

[ode]
family = power
r = 1, 2, 3
alpha = -1, 0.5
nmax = 20

[ode.others]
family = monomials, hermite, expsum, laplace
nmax = 15

[ode.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0.5 0 0.25
nmax = 15

[ode.lifted]
family = lifted
system = monomials, hermite
r = 1, 2, 3
alpha = -1, 0.5
nmax = 15

[generating]
family = laplace
alpha = -1, -0.25

[generating.others]
family = monomials, hermite, expsum

[generating.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0 -0.5

[generating.lifted]
family = lifted
system = hermite
r = 2
alpha = -1

[integral-rep]
family = laplace
alpha = -1, -0.25

[integral-rep.power]
family = power
r = 2
alpha = -1, -2

[integral-rep.lifted]
family = lifted
system = monomials, hermite
r = 2
alpha = -1

[integral-rep.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0 -0.5

[roots]
family = power
r = 2, 3
alpha = -1, -2
nmax = 20

[asymptotics]
family = power
r = 1, 2
alpha = -1, 1, -0.25

[extension]
family = expsum
nmax = 15

[extension.power]
family = power
r = 1, 2
alpha = 1, -1

[extension.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1

[pencil]
family = monomials, hermite, expsum, laplace
nmax = 14

[pencil.power]
family = power
r = 1, 2, 3
alpha = -1, 0.5
nmax = 14

[pencil.genfun]
family = genfun
system = monomials, hermite
coeffs = 2 1, 1 0.5 0 0.25
nmax = 14

[pencil.lifted]
family = lifted
system = monomials, hermite
r = 2
alpha = -1
nmax = 14

[gram-schmidt]
family = power
r = 1, 2, 3
alpha = 1, -1

[gram-schmidt.others]
family = expsum, hermite

[gram-schmidt.genfun]
family = genfun
system = hermite
coeffs = 2 1
nmax = 10
'''


def _parse_coeffs(item):
    return tuple(float(c) for c in item.split())


_KEYS = {
    'family': str,
    'system': str,
    'r': int,
    'alpha': float,
    'branch': int,
    'nmax': int,
    'coeffs': _parse_coeffs,
}


def _grid(section):
    '''Cartesian product of the comma-separated value lists of a section.'''
    keys, values = [], []
    for key, value in section.items():
        try:
            parse = _KEYS[key]
        except KeyError:
            raise ValueError(f'unknown parameter: {key}') from None
        items = [v.strip() for v in value.split(',') if v.strip()]
        try:
            values.append([parse(v) for v in items])
        except ValueError:
            raise ValueError(f'invalid value for {key}: {value}') from None
        keys.append(key)
    return [dict(zip(keys, combo)) for combo in itertools.product(*values)]


def load_config(path=None):
    '''Read a suite configuration.

    Sections are named after a suite, optionally with a ``.tag`` suffix so
    that a suite can be listed several times.  The ``run`` section holds
    ``seed`` and ``tol_scale``.

    Parameters
    ----------
    path : str, optional
        Path of the INI file.  The built-in :data:`DEFAULT_CONFIG` is used
        if not given.

    Returns
    -------
    options : dict
        The ``seed`` and ``tol_scale`` of the run.
    runs : list of (str, dict)
        Suite names and parameters, one entry per grid point.

    Raises
    ------
    OSError
        If the file cannot be read.
    ValueError
        If the configuration is invalid.

    '''
    parser = configparser.ConfigParser(default_section='__none__')
    try:
        if path is None:
            parser.read_string(DEFAULT_CONFIG)
        else:
            with open(path) as f:
                parser.read_file(f)
    except configparser.Error as exc:
        raise ValueError(f'invalid config: {exc}') from None

    options = {'seed': 0, 'tol_scale': 1.0}
    if parser.has_section('run'):
        run = parser['run']
        try:
            options['seed'] = run.getint('seed', options['seed'])
            options['tol_scale'] = run.getfloat('tol_scale',
                                                options['tol_scale'])
        except ValueError as exc:
            raise ValueError(f'invalid run options: {exc}') from None

    runs = []
    for name in parser.sections():
        if name == 'run':
            continue
        suite = name.split('.', 1)[0]
        if suite not in SUITES:
            raise ValueError(f'unknown suite: {suite}')
        runs += [(suite, params) for params in _grid(parser[name])]
    return options, runs


def _label_value(v):
    return ' '.join(map(repr, v)) if isinstance(v, tuple) else v


def _label(suite, params):
    args = ','.join(f'{k}={_label_value(v)}'
                    for k, v in sorted(params.items()))
    return f'{suite}[{args}]'


def run_all(options, runs):
    '''Run suites over a parameter grid and merge them into one report.

    Check ids of the merged report are prefixed by the suite name and its
    parameters.

    '''
    seed, tol_scale = options['seed'], options['tol_scale']
    checks, seconds = [], 0.0
    for suite, params in runs:
        report = run_suite(suite, params, seed, tol_scale)
        label = _label(suite, params)
        for c in report.checks:
            checks.append(CheckRecord(f'{label}:{c.id}', c.ref, c.residual,
                                      c.tol, c.passed, c.note))
        seconds += report.seconds
    return Report('all', {'seed': seed, 'tol_scale': tol_scale}, checks,
                  seconds)
