# -*- coding: utf-8 -*-
"""Command line interface, run as ``ncdirac`` or ``python -m ncdirac``.

Structures, matrices and polynomials are read as JSON from a file path,
from stdin with ``@-`` or inline when the argument starts with ``{`` or
``[``. Results are written as JSON to stdout, ``inspect``, ``rep`` and
``verify`` write a readable report unless ``--json`` is given.

Exit codes:

==== ==================================================
0    ok
1    input or parse error
2    singular denominator of the fractional-linear action
3    not a Dirac structure
4    dimension mismatch
5    not Poisson for the chosen index set
6    orbit target not found within bounds
7    ``verify`` found a failing property
==== ==================================================

Errors are reported on stderr as a single line ``error: <Tag>: <message>``.

>>> from ncdirac.cli import main
>>> main(['act', '--word', 'sigma{1,2}', '--json',
...       '{"n": 2, "basis": [[0, "-1/2", 1, 0], ["1/2", 0, 0, 1]]}'])
{"n": 2, "basis": [[1, 0, 0, "-1/2"], [0, 1, "1/2", 0]]}
0
>>> main(['fraclin', '--word', 'sigma{1,2}', '--pi', '[[0, 0], [0, 0]]'])
2

"""
import argparse
import json
import sys
from . import __version__
from .exact_core import DimensionMismatch, Singular, parse_rational
from .dirac import (DiracStructure, NotDirac, NotSkew, NotPoisson,
                    graph_poisson, characteristic_integer_basis)
from .onn import (ParseError, WordParser, parse_word, eval_word, act, frac_linear, sigma)
from .poissonize import find_transversal, split_blocks, from_split
from .qtorus import (FourierPolynomial, PoissonMatrix, NotCoprime,
                     star, clock_shift, commutation_matrix, descriptor)
from .orbit import (OrbitOptions, GeneratorSet, NotFoundWithinBounds,
                    generators_by_name, explore, connect)
from .interfaces import ComputationError, InputError
from .utilities import utils

exit_codes = [
    (NotFoundWithinBounds, 6),
    (NotPoisson, 5),
    (DimensionMismatch, 4),
    (NotDirac, 3),
    (Singular, 2),
    (ComputationError, 1),
]
"""exception classes and exit codes, the first matching class counts"""

verify_failed = 7

def exit_code(error):
    """return the exit code of the `ComputationError` ``error``.

    >>> from ncdirac.cli import exit_code
    >>> from ncdirac.onn import SingularDenominator, ParseError
    >>> from ncdirac.dirac import NotIsotropic, NotSkew
    >>> from ncdirac.qtorus import NotCoprime
    >>> exit_code(SingularDenominator()), exit_code(NotIsotropic())
    (2, 3)
    >>> exit_code(NotSkew()), exit_code(NotCoprime()), exit_code(ParseError('x'))
    (1, 1, 1)

    """
    for cls, code in exit_codes:
        if isinstance(error, cls):
            return code
    return 1


class ArgumentParser(argparse.ArgumentParser):
    """raise `InputError` instead of exiting with argparse's code 2"""
    def error(self, message):
        raise InputError(message)


def load_json(source):
    """return the parsed JSON of a path, of stdin for ``@-`` or of
    inline text starting with ``{`` or ``[``"""
    if source == '@-':
        text = sys.stdin.read()
    elif source.lstrip().startswith(('{', '[')):
        text = source
    else:
        try:
            with open(source) as f:
                text = f.read()
        except (IOError, OSError) as e:
            raise InputError('cannot read "%s": %s' % (source, str(e)))
    try:
        return json.loads(text)
    except ValueError as e:
        raise InputError('malformed JSON in %s: %s'
                         % ('stdin' if source == '@-' else source, str(e)))

def parse_index_set(text):
    """return the 1-based indices of ``"{1,3}"``, ``"1,3"`` or ``"{}"``.

    >>> from ncdirac.cli import parse_index_set
    >>> parse_index_set('{3, 1}'), parse_index_set('2'), parse_index_set('{}')
    ((1, 3), (2,), ())

    """
    text = text.strip()
    if not text.startswith('{'):
        text = '{' + text + '}'
    parser = WordParser(text)
    indices = parser.parse_index_set()
    if not parser.at_end():
        raise parser.error('expected end of index set')
    return indices


def run_inspect(args):
    gamma = DiracStructure.from_json(load_json(args.input))
    data = gamma.characteristic()
    report = {'n': gamma.n,
              'basis': gamma.basis.to_json(),
              'nullity': data.nullity,
              'parity': data.parity,
              'characteristic': characteristic_integer_basis(gamma).to_json(),
              'p_star': gamma.p_star().basis.to_json(),
              'descriptor': descriptor(gamma).to_json()}
    if args.json:
        return report, 0
    lines = ['n:              %d' % gamma.n,
             'basis:          %s' % json.dumps(report['basis']),
             'nullity:        %d' % data.nullity,
             'parity:         %s' % data.parity,
             'characteristic: %s' % json.dumps(report['characteristic']),
             'p_star:         %s' % json.dumps(report['p_star']),
             'theta mod 1:    %s' % json.dumps(report['descriptor']['theta_reduced'])]
    return '\n'.join(lines), 0

def run_act(args):
    gamma = DiracStructure.from_json(load_json(args.input))
    g = eval_word(parse_word(args.word), gamma.n)
    return act(g, gamma).to_json(), 0

def run_poissonize(args):
    gamma = DiracStructure.from_json(load_json(args.input))
    if args.I is None:
        i_set = find_transversal(gamma).i_set
    else:
        i_set = parse_index_set(args.I)
    return split_blocks(gamma, i_set).to_json(), 0

def run_star(args):
    f = FourierPolynomial.from_json(load_json(args.f))
    g = FourierPolynomial.from_json(load_json(args.g))
    pi = PoissonMatrix.from_json(load_json(args.pi))
    return star(f, g, pi, parse_rational(args.hbar)).to_json(), 0

def run_fraclin(args):
    pi = PoissonMatrix.from_json(load_json(args.pi))
    g = eval_word(parse_word(args.word), pi.n)
    return PoissonMatrix(frac_linear(g, pi.entries)).to_json(), 0

def _orbit_options(args):
    opts = OrbitOptions(generators=args.generators, n_jobs=args.jobs,
                        verbose=-9 if args.quiet else 0).complement()
    if args.depth is not None:
        opts['depth'] = args.depth
    if args.max_nodes is not None:
        opts['max_nodes'] = args.max_nodes
    return opts

def run_orbit(args):
    seed = DiracStructure.from_json(load_json(args.input))
    opts = _orbit_options(args)
    if args.gen:
        gens = GeneratorSet.from_words(args.gen, seed.n)
    else:
        gens = generators_by_name(args.generators, seed.n)
    if args.target is None:
        return explore(seed, gens, options=opts).to_json(), 0
    target = DiracStructure.from_json(load_json(args.target))
    witness = connect(seed, target, gens, options=opts)
    return {'witness': str(witness), 'depth': len(witness)}, 0

def run_rep(args):
    theta = parse_rational(args.theta)
    rep = clock_shift(theta.numerator, theta.denominator)
    if args.json:
        return rep.to_json(), 0
    return '\n'.join([
        'p/q:                 %d/%d' % (rep.p, rep.q),
        'relation residual:   %.3g' % rep.relation_residual(),
        'unitarity residual:  %.3g' % rep.unitarity_residual()]), 0


def _properties(gamma):
    """yield ``(name, passed)`` of the invariant battery on ``gamma``"""
    n = gamma.n
    a, b = gamma.A, gamma.B
    yield 'isotropic', (a @ b.T + b @ a.T).is_zero()
    data = gamma.characteristic()
    yield 'p_star_is_annihilator', (
        gamma.p_star() == data.characteristic.annihilator())
    exchanged = [act(sigma({i}, n), gamma) for i in range(1, n + 1)]
    yield 'sigma_i_changes_nullity_by_one', all(
        abs(other.nullity - gamma.nullity) == 1 for other in exchanged)
    yield 'sigma_i_flips_parity', all(
        other.parity != gamma.parity for other in exchanged)
    rho_images = [act(g, gamma) for label, g in generators_by_name('default', n)
                  if label.startswith('rho')]
    yield 'rho_preserves_nullity', all(
        other.nullity == gamma.nullity for other in rho_images)
    transversal = find_transversal(gamma)
    split = split_blocks(gamma, transversal.i_set)
    yield 'sigma_transversal_is_poisson', (
        act(sigma(set(transversal.i_set), n), gamma).is_poisson)
    yield 'split_round_trip', from_split(
        split.pi_m, split.beta, transversal.i_set, n) == gamma
    i0 = [i - 1 for i in transversal.i_set]
    yield 'transversal_block_vanishes', split.pi.take(i0, i0).is_zero()
    yield 'commutation_matrix_graph', graph_poisson(
        commutation_matrix(gamma, transversal.i_set).entries) == act(
            sigma(set(transversal.i_set), n), gamma)
    rest = set(transversal.i_set) - {1}
    yield 'exchange_diagram', eval_word(
        'sigma{1};sigma{%s}' % ','.join(str(i) for i in sorted(rest | {1})),
        n) == sigma(rest, n)
    if gamma.is_poisson:
        pi = gamma.poisson_matrix()
        agree = True
        for _, g in generators_by_name('default', n):
            try:
                image = frac_linear(g, pi)
            except Singular:
                continue
            agree = agree and graph_poisson(image) == act(g, gamma)
        yield 'fractional_linear_equivariance', agree
    yield 'json_round_trip', DiracStructure.from_json(
        json.loads(gamma.dumps())) == gamma

def run_verify(args):
    gamma = DiracStructure.from_json(load_json(args.input))
    properties = list(_properties(gamma))
    passed = all(ok for _, ok in properties)
    code = 0 if passed else verify_failed
    if args.json:
        return {'n': gamma.n, 'passed': passed,
                'properties': dict(properties)}, code
    width = max(len(name) for name, _ in properties)
    lines = ['%s  %s' % (name.ljust(width), 'pass' if ok else 'FAIL')
             for name, ok in properties]
    lines.append('%d of %d properties pass'
                 % (sum(ok for _, ok in properties), len(properties)))
    return '\n'.join(lines), code


def _common(parser, with_json=True):
    if with_json:
        parser.add_argument('--json', action='store_true',
                            help='write machine readable JSON')
    parser.add_argument('--quiet', action='store_true',
                        help='suppress notes and warnings')

def make_parser():
    """return the `ArgumentParser` with all subcommands"""
    parser = ArgumentParser(
        prog='ncdirac',
        description='exact computations with constant Dirac structures '
                    'on n-tori and their quantizations')
    parser.add_argument('--version', action='version',
                        version='ncdirac ' + __version__)
    sub = parser.add_subparsers(dest='command', parser_class=ArgumentParser)

    p = sub.add_parser('inspect', help='characteristic data of a structure')
    p.add_argument('input', help='DiracStructure JSON, path or @-')
    _common(p)
    p.set_defaults(run=run_inspect)

    p = sub.add_parser('act', help='apply a generator word')
    p.add_argument('input', help='DiracStructure JSON, path or @-')
    p.add_argument('--word', required=True, help='e.g. "sigma{1};rho[[1,0],[1,1]]"')
    _common(p)
    p.set_defaults(run=run_act)

    p = sub.add_parser('poissonize', help='transversal, Poisson matrix, holonomy')
    p.add_argument('input', help='DiracStructure JSON, path or @-')
    p.add_argument('--I', help='index set like "{1,3}", default the pivot transversal')
    _common(p)
    p.set_defaults(run=run_poissonize)

    p = sub.add_parser('star', help='star product of Fourier polynomials')
    p.add_argument('f', help='FourierPolynomial JSON')
    p.add_argument('g', help='FourierPolynomial JSON')
    p.add_argument('--pi', required=True, help='PoissonMatrix JSON')
    p.add_argument('--hbar', default='1', help='rational deformation parameter')
    _common(p)
    p.set_defaults(run=run_star)

    p = sub.add_parser('fraclin', help='fractional-linear action on a Poisson matrix')
    p.add_argument('--word', required=True)
    p.add_argument('--pi', required=True, help='PoissonMatrix JSON')
    _common(p)
    p.set_defaults(run=run_fraclin)

    p = sub.add_parser('orbit', help='bounded orbit exploration')
    p.add_argument('input', help='seed DiracStructure JSON, path or @-')
    p.add_argument('--depth', type=int)
    p.add_argument('--max-nodes', type=int, dest='max_nodes')
    p.add_argument('--target', help='DiracStructure JSON to connect to')
    p.add_argument('--generators', default='default', choices=('default', 'special'))
    p.add_argument('--gen', action='append',
                   help='generator word, repeatable, replaces --generators')
    p.add_argument('--jobs', type=int, default=0,
                   help='processes expanding a frontier, 0 is sequential')
    _common(p)
    p.set_defaults(run=run_orbit)

    p = sub.add_parser('rep', help='clock and shift representation')
    p.add_argument('--theta', required=True, help='rational p/q')
    _common(p)
    p.set_defaults(run=run_rep)

    p = sub.add_parser('verify', help='check the invariant battery on a structure')
    p.add_argument('input', help='DiracStructure JSON, path or @-')
    _common(p)
    p.set_defaults(run=run_verify)
    return parser

def main(argv=None):
    """run the command line ``argv`` and return the exit code"""
    verbosity = utils.global_verbosity
    try:
        args = make_parser().parse_args(argv)
        if not getattr(args, 'run', None):
            raise InputError('a subcommand is required, see --help')
        if args.quiet:
            utils.global_verbosity = -9
        result, code = args.run(args)
    except ComputationError as e:
        sys.stderr.write('error: %s: %s\n' % (e.tag, str(e)))
        return exit_code(e)
    finally:
        utils.global_verbosity = verbosity
    if utils.is_str(result):
        print(result)
    else:
        print(json.dumps(result))
    return code

def console_main():
    """entry point of the ``ncdirac`` script"""
    sys.exit(main())
