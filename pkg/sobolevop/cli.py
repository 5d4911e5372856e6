# license: MIT
'''command line interface of the sobolevop package'''

import argparse
import json
import logging
import sys

from . import __version__
from .classical import ClassicalFamily
from .errors import SobolevopError
from .suites import DEFAULT_NMAX, SUITES, load_config, run_all, run_suite

logger = logging.getLogger(__name__)

#: exit code of a failed check
EXIT_FAIL = 1

#: exit code of invalid arguments or parameters
EXIT_USAGE = 2


def _number(x):
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _pair(c):
    return f'{_number(c.real)},{_number(c.imag)}'


def _coeffs(text):
    try:
        return tuple(float(c) for c in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid coefficients: {text}') \
            from None


def family_params(args):
    '''Family parameters given on the command line.'''
    params = {'family': args.family}
    for key in 'r', 'alpha', 'system', 'coeffs':
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def _write(text, out):
    if out is None:
        sys.stdout.write(text + '\n')
    else:
        with open(out, 'w') as f:
            f.write(text + '\n')
        logger.info('wrote %s', out)


def format_csv(polys):
    '''One row per degree, with ascending coefficients as ``re,im``
    pairs.'''
    return '\n'.join(f'{n}: ' + ' '.join(_pair(c) for c in p.padded(n+1))
                     for n, p in enumerate(polys))


def format_json(family, polys):
    return json.dumps({
        'family': family.name,
        'params': {k: list(v) if isinstance(v, tuple) else v
                   for k, v in family.params.items()},
        'polys': [{'n': n, 'coeffs': [[c.real, c.imag]
                                      for c in p.padded(n+1)]}
                  for n, p in enumerate(polys)],
    }, indent=2, sort_keys=True)


def cmd_gen(args):
    '''Write the coefficient table of a family.'''
    params = family_params(args)
    family = ClassicalFamily.from_name(params.pop('family'), **params)
    polys = family.polys(args.nmax)
    if args.format == 'json':
        text = format_json(family, polys)
    else:
        text = format_csv(polys)
    _write(text, args.out)
    return 0


def cmd_check(args):
    '''Run a single suite and write its report.'''
    params = family_params(args)
    params['nmax'] = args.nmax
    report = run_suite(args.suite, params, args.seed, args.tol_scale)
    _write(report.to_json(), args.out)
    return 0 if report.passed else EXIT_FAIL


def cmd_report_all(args):
    '''Run all configured suites and write the merged report.'''
    options, runs = load_config(args.config)
    if args.seed is not None:
        options['seed'] = args.seed
    if args.tol_scale is not None:
        options['tol_scale'] = args.tol_scale
    report = run_all(options, runs)
    _write(report.to_json(), args.out)
    if not report.passed:
        failed = sum(not c.passed for c in report.checks)
        logger.warning('%d of %d checks failed', failed, len(report.checks))
    return 0 if report.passed else EXIT_FAIL


def _family_options(parser, family):
    parser.add_argument('--family', default=family,
                        help='family tag (default: %(default)s)')
    parser.add_argument('--example21', dest='family', action='store_const',
                        const='example21',
                        help='shorthand for --family example21')
    parser.add_argument('--r', type=int, help='order of the derivative')
    parser.add_argument('--alpha', type=float,
                        help='coefficient of the derivative')
    parser.add_argument('--system', help='base system: monomials or hermite')
    parser.add_argument('--coeffs', type=_coeffs,
                        help='coefficients c0,c1,... of the generating '
                             'polynomial')
    parser.add_argument('--n', '--nmax', dest='nmax', type=int,
                        default=DEFAULT_NMAX,
                        help='highest degree (default: %(default)s)')


def make_parser():
    parser = argparse.ArgumentParser(
        prog='sobolevop',
        description='Sobolev orthogonal polynomial families and their '
                    'verification suites.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='increase verbosity')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='write the coefficients of a family')
    _family_options(gen, None)
    gen.add_argument('--format', choices=['csv', 'json'], default='csv')
    gen.add_argument('--out', help='output file (default: stdout)')
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser('check', help='run a verification suite')
    check.add_argument('suite', choices=sorted(SUITES))
    _family_options(check, 'power')
    check.add_argument('--seed', type=int, default=0)
    check.add_argument('--tol-scale', type=float, default=1.0)
    check.add_argument('--out', help='report file (default: stdout)')
    check.set_defaults(func=cmd_check)

    report = sub.add_parser('report-all', help='run all configured suites')
    report.add_argument('config', nargs='?',
                        help='INI configuration (default: built-in)')
    report.add_argument('--seed', type=int)
    report.add_argument('--tol-scale', type=float)
    report.add_argument('--out', help='report file (default: stdout)')
    report.set_defaults(func=cmd_report_all)

    return parser


def main(argv=None):
    '''Entry point of the ``sobolevop`` command.'''
    parser = make_parser()
    args = parser.parse_args(argv)

    level = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(level=level[min(args.verbose, 2)],
                        format='%(levelname)s %(name)s: %(message)s')

    if args.command == 'gen' and args.family is None:
        parser.error('gen requires --family')

    try:
        return args.func(args)
    except (SobolevopError, ValueError, OSError) as exc:
        print(f'sobolevop: {exc}', file=sys.stderr)
        return EXIT_USAGE
