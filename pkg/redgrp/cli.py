"""redgrp command line

Every subcommand writes CSV or ``key: value`` records to ``--output`` (or
standard output) and returns an exit status:

* 0: every check held
* 1: a checked inequality or bound failed
* 2: bad usage or unparsable input
* 3: a ball, support, search or iteration cap was exceeded
"""

import argparse
import contextlib
import logging
import sys
from fractions import Fraction

from redgrp import __version__
from redgrp.algebra import (
    RadialElement,
    moment_sequence,
    radial_moments,
    random_element
)
from redgrp.compression import (
    increasing_window_profile,
    prop_a_window,
    sandwich_check
)
from redgrp.exc import (
    CapExceededError,
    ConfigurationError,
    NonConvergenceError,
    OracleMismatchError,
    ParseError,
    RedgrpError,
    SmallCancellationError,
    UnsupportedOracleError
)
from redgrp.groups import (
    ball,
    standard_set,
    symmetrize
)
from redgrp.io import (
    format_certificate,
    format_record,
    read_element_file,
    read_manifest_file,
    write_csv
)
from redgrp.marked import (
    MarkedSequence,
    estimate_norm,
    srf_uniformity,
    strong_convergence_table
)
from redgrp.means import (
    FolnerMean,
    PointMean,
    TreeMean,
    certify_mean,
    default_mean,
    modulus_estimate
)
from redgrp.norms import norm_oracle
from redgrp.oracles import FreeOracle
from redgrp.parser import parse_group
from redgrp.util import (
    DEFAULT_AGREEMENT_RADIUS,
    DEFAULT_JOBS,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE
)
from redgrp.words import words_from_text


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

MEANS = {
    'folner': FolnerMean,
    'tree': TreeMean,
    'point': lambda oracle, n: PointMean(oracle),
}


def int_list(text):
    """``1..10`` or ``1,2,5``"""
    try:
        if '..' in text:
            lo, hi = text.split('..', 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected 1..10 or 1,2,5, got {!r}".format(text))


def fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected a number, got {!r}".format(text))


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w') as stream:
            yield stream


def _element(args, oracle):
    return read_element_file(args.element, oracle)


def cmd_ball(args, out):
    oracle = parse_group(args.group)
    F = symmetrize(oracle, words_from_text(args.set, oracle.rank)) \
        if args.set else None
    window = ball(oracle, F, args.radius)
    if args.list:
        for w in window:
            out.write(oracle.format(w) + '\n')
    else:
        out.write('{}\n'.format(len(window)))
    return EXIT_OK


def cmd_norm(args, out):
    oracle = parse_group(args.group)
    f = _element(args, oracle)
    if args.method == 'oracle':
        estimate = norm_oracle(f, tol=args.tol)
        pairs = [('group', oracle.spec), ('method', estimate.method),
                 ('norm', estimate.value), ('tolerance', estimate.tolerance)]
    else:
        pairs = [('group', oracle.spec), ('method', args.method),
                 ('norm', estimate_norm(f, args.method))]
    out.write(format_record(pairs))
    return EXIT_OK


def cmd_srf(args, out):
    if args.delta is not None:
        instances = []
        for spec in args.group:
            instances.append(_element(args, parse_group(spec)))
        table = srf_uniformity(instances, args.delta, moments=args.n,
                               jobs=args.jobs)
        write_csv(out, ('group', 'reference', 'n', 'root'), [
            (r.label, r.reference,
             r.n if r.reached else '>{}'.format(r.moments), r.root)
            for r in table.rows])
        if table.bound is not None:
            logger.info("common bound n = %d", table.bound)
        return EXIT_OK
    if len(args.group) != 1:
        raise ValueError("several groups need --delta")
    f = _element(args, parse_group(args.group[0]))
    radial = RadialElement.from_element(f)
    sequence = radial_moments(radial, args.n) if radial is not None \
        else moment_sequence(f, args.n)
    write_csv(out, ('n', 'moment', 'root'), [
        (n, m, r) for n, (m, r) in
        enumerate(zip(sequence.values, sequence.roots), start=1)])
    problems = sequence.check()
    for problem in problems:
        logger.error("moment sequence: %s", problem)
    if sequence.truncated:
        return EXIT_CAP
    return EXIT_FALSIFIED if problems else EXIT_OK


def cmd_compress(args, out):
    oracle = parse_group(args.group)
    f = _element(args, oracle)
    profile = increasing_window_profile(f, args.radii, tol=args.tol,
                                        jobs=args.jobs, method=args.method)
    write_csv(out, ('radius', 'dimension', 'norm', 'iterations',
                    'tolerance'), [r.as_tuple() for r in profile.rows])
    if profile.truncated:
        return EXIT_CAP
    if not profile.monotone:
        logger.error("compression norms decrease: %r", profile.norms())
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_mean_certify(args, out):
    oracle = parse_group(args.group)
    factory = default_mean if args.mean is None else MEANS[args.mean]
    F = symmetrize(oracle, words_from_text(args.set, oracle.rank)) \
        if args.set else None
    certificate = certify_mean(factory(oracle, args.n), F,
                               radius=args.radius, jobs=args.jobs)
    out.write(format_certificate(certificate))
    return EXIT_OK if certificate.passed else EXIT_FALSIFIED


def cmd_modulus(args, out):
    oracle = parse_group(args.group)
    table = modulus_estimate(oracle, args.scheme, sizes=args.sizes,
                             search_cap=args.search_cap, radius=args.radius,
                             jobs=args.jobs)
    write_csv(out, ('size', 'k', 'n', 'defect'), [
        ('all' if e.size is None else e.size, e.k, e.n,
         e.certificate.defect if e.certificate else None)
        for e in table.rows()])
    return EXIT_OK


def cmd_converge(args, out):
    sequence = MarkedSequence([parse_group(t) for t in args.term],
                              parse_group(args.limit))
    f = _element(args, FreeOracle(sequence.rank))
    methods = args.method if args.method else None
    if methods is not None and len(methods) == 1:
        methods = methods[0]
    table = strong_convergence_table(sequence, f, methods=methods,
                                     r_max=args.r_max, jobs=args.jobs)
    write_csv(out, ('index', 'group', 'distance', 'norm', 'gap'), [
        (r.index, r.label, str(r.distance), r.norm, r.gap)
        for r in table.rows])
    logger.info("limit norm %r", table.limit_norm)
    return EXIT_OK


def _sandwich_window(args, oracle, f, eps):
    """The window E and the eps it is good for

    ``modulus`` windows on finite groups come from the certified saturated
    table with eps its certificate defect; on infinite groups the shortlex
    modulus is certified at m = |F| + floor(2/eps).
    """
    if args.window == 'full':
        order = oracle.order()
        if order is None:
            raise UnsupportedOracleError(
                "{} is infinite; give a radius".format(oracle.spec))
        return ball(oracle, None, order), eps
    if args.window == 'modulus':
        if oracle.order() is not None:
            table = modulus_estimate(oracle, jobs=args.jobs)
            certified = table.rows()[0].certificate.defect
            if certified != eps:
                logger.info("using the certified eps %s instead of %s",
                            certified, eps)
            return prop_a_window(oracle, standard_set(oracle), certified,
                                 table), certified
        F = symmetrize(oracle, f.support)
        if not eps:
            raise ValueError("modulus windows on {} need a positive --eps"
                             .format(oracle.spec))
        m = len(F) + int(2 / eps)
        table = modulus_estimate(oracle, 'shortlex', sizes=[m],
                                 jobs=args.jobs)
        return prop_a_window(oracle, F, eps, table), eps
    return ball(oracle, None, int(args.window)), eps


def cmd_sandwich(args, out):
    oracle = parse_group(args.group)
    if args.random:
        elements = [random_element(oracle, args.support, l1=args.l1,
                                   seed=args.seed + i)
                    for i in range(args.random)]
    else:
        elements = [_element(args, oracle)]
    rows, failed = [], 0
    for i, f in enumerate(elements):
        reference = norm_oracle(f)
        window, eps = _sandwich_window(args, oracle, f, args.eps)
        report = sandwich_check(f, window, eps, reference,
                                tol=args.tol, method=args.method)
        failed += not report.passed
        rows.append((i, report.reference, report.compression, report.eps,
                     report.dimension, report.upper_margin,
                     report.lower_margin, report.passed))
    write_csv(out, ('index', 'reference', 'compression', 'eps', 'dimension',
                    'upper_margin', 'lower_margin', 'passed'), rows)
    if failed:
        logger.error("%d of %d sandwich checks failed", failed, len(rows))
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_run(args, out):
    manifest = read_manifest_file(args.manifest)
    logger.info("running %r", manifest)
    return main(manifest.argv(), configure_logging=False)


def _group(parser, many=False):
    if many:
        parser.add_argument('--group', action='append', required=True,
                            help='group spec, may be repeated')
    else:
        parser.add_argument('--group', required=True,
                            help='group spec, e.g. free:2 or cyclic:12')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='redgrp',
        description='Reduced group C*-algebra experiments on marked groups')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--jobs', type=int, default=DEFAULT_JOBS,
                        help='rows evaluated concurrently')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    parser.add_argument('--output', help='output file (default: stdout)')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('ball', help='size of a ball')
    _group(p)
    p.add_argument('--radius', type=int, required=True)
    p.add_argument('--set', help='comma separated words generating the ball')
    p.add_argument('--list', action='store_true',
                   help='print the elements instead of their number')
    p.set_defaults(handler=cmd_ball)

    p = commands.add_parser('norm', help='norm of an element')
    _group(p)
    p.add_argument('--element', required=True)
    p.add_argument('--method', default='oracle',
                   help='oracle, moment:N or compression:R')
    p.add_argument('--tol', type=float, default=None)
    p.set_defaults(handler=cmd_norm)

    p = commands.add_parser('srf', help='moments of the spectral radius '
                            'formula')
    _group(p, many=True)
    p.add_argument('--element', required=True)
    p.add_argument('--n', type=int, required=True, help='number of moments')
    p.add_argument('--delta', type=float,
                   help='report the least n reaching (1 - delta) ||f||')
    p.set_defaults(handler=cmd_srf)

    p = commands.add_parser('compress', help='increasing window profile')
    _group(p)
    p.add_argument('--element', required=True)
    p.add_argument('--radii', type=int_list, required=True)
    p.add_argument('--method', choices=('power', 'dense', 'auto'),
                   default='power')
    p.add_argument('--tol', type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(handler=cmd_compress)

    p = commands.add_parser('mean-certify', help='certify a mean')
    _group(p)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--mean', choices=sorted(MEANS))
    p.add_argument('--set', help='comma separated words of F')
    p.add_argument('--radius', type=int)
    p.set_defaults(handler=cmd_mean_certify)

    p = commands.add_parser('modulus', help='estimate a modulus')
    _group(p)
    p.add_argument('--scheme', choices=('standard', 'powers', 'shortlex'),
                   default='standard')
    p.add_argument('--sizes', type=int_list)
    p.add_argument('--search-cap', type=int)
    p.add_argument('--radius', type=int)
    p.set_defaults(handler=cmd_modulus)

    p = commands.add_parser('converge', help='strong convergence table')
    p.add_argument('--term', action='append', required=True)
    p.add_argument('--limit', required=True)
    p.add_argument('--element', required=True)
    p.add_argument('--method', action='append',
                   help='oracle, moment:N or compression:R; once or per term')
    p.add_argument('--r-max', type=int, default=DEFAULT_AGREEMENT_RADIUS)
    p.set_defaults(handler=cmd_converge)

    p = commands.add_parser('sandwich', help='check a norm by compression')
    _group(p)
    p.add_argument('--element')
    p.add_argument('--random', type=int, metavar='COUNT',
                   help='check COUNT random elements instead')
    p.add_argument('--support', type=int, default=4)
    p.add_argument('--l1', type=fraction, default=Fraction(3))
    p.add_argument('--window', default='full',
                   help='full, modulus or a radius')
    p.add_argument('--eps', type=fraction, default=Fraction(0))
    p.add_argument('--method', choices=('power', 'dense', 'auto'),
                   default='auto')
    p.add_argument('--tol', type=float, default=1e-9)
    p.set_defaults(handler=cmd_sandwich)

    p = commands.add_parser('run', help='execute an experiment manifest')
    p.add_argument('manifest')
    p.set_defaults(handler=cmd_run)
    return parser


def _check(args):
    if args.jobs < 1:
        raise ValueError("--jobs must be positive")
    if args.command == 'sandwich':
        if not args.random and not args.element:
            raise ValueError("sandwich needs --element or --random")
        if args.window not in ('full', 'modulus') and \
                not args.window.isdigit():
            raise ValueError("--window must be full, modulus or a radius")


def main(argv=None, configure_logging=True):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    if configure_logging:
        level = logging.DEBUG if args.verbose else \
            logging.WARNING if args.quiet else logging.INFO
        logging.basicConfig(
            stream=sys.stderr, level=level,
            format='%(levelname)s %(name)s: %(message)s')
    try:
        _check(args)
        with _output(args.output) as out:
            return args.handler(args, out)
    except CapExceededError as e:
        logger.error("%s", e)
        return EXIT_CAP
    except NonConvergenceError as e:
        logger.error("%s after %s iterations", e, e.iterations)
        return EXIT_CAP
    except (ParseError, ValueError, ConfigurationError, OracleMismatchError,
            SmallCancellationError, UnsupportedOracleError, IOError,
            OSError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except RedgrpError as e:
        logger.error("%s", e)
        return EXIT_FALSIFIED


if __name__ == '__main__':
    sys.exit(main())
