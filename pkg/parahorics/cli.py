"""
Command line front end.

Every subcommand prints a table (default), tab separated values or JSON::

    parahorics hyperspecial --max-rank 8
    parahorics dimension A1 --genus 2 --theta 1/2
    parahorics pardeg --deg 0 --weights 1/2,1/2 --format json

Exit status is 0 on success, 2 on usage errors and 1 on domain errors.
"""
from __future__ import print_function, division, absolute_import

import argparse
from contextlib import contextmanager, redirect_stderr, redirect_stdout
import json
import sys

from .rootsys import build_root_system, parse_type, RootSystemError
from .apartment import (apartment_point, parse_fraction, alcove_vertices,
                        ApartmentError, format_fraction)
from .parahoric import (descriptor, closed_fiber_parabolic, levi_roots,
                        hyperspecial_table)
from .localtype import local_type, local_rep_of_weight, root_group_action
from .dimension import moduli_spec, dimension_report, hecke_fiber_dim
from .parabolic import parabolic_line, pardeg

FORMATS = ('table', 'json', 'tsv')


class result(object):

    """ A command result: JSON payload plus the same values as table rows.
    """

    def __init__(self, payload, headers, rows):
        self.payload = payload
        self.headers = headers
        self.rows = [[_cell(v) for v in row] for row in rows]

    def render(self, fmt):
        if fmt == 'json':
            return json.dumps(self.payload, indent=2, sort_keys=True)
        if fmt == 'tsv':
            return '\n'.join('\t'.join(row) for row in [self.headers] + self.rows)
        widths = [max([len(h)] + [len(row[j]) for row in self.rows])
                  for j, h in enumerate(self.headers)]
        lines = ['  '.join(h.ljust(w) for h, w in zip(self.headers, widths)),
                 '  '.join('-' * w for w in widths)]
        lines.extend('  '.join(c.ljust(w) for c, w in zip(row, widths))
                     for row in self.rows)
        return '\n'.join(line.rstrip() for line in lines)


def _cell(value):
    if isinstance(value, (list, tuple)):
        return '(' + ','.join(_cell(v) for v in value) + ')'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    return str(value)


# argument types

def _type_arg(text):
    try:
        return build_root_system(parse_type(text))
    except RootSystemError as e:
        raise argparse.ArgumentTypeError(str(e))


def _fractions_arg(text):
    try:
        return [parse_fraction(piece) for piece in text.split(',')]
    except ApartmentError as e:
        raise argparse.ArgumentTypeError(str(e))


def _integers_arg(text):
    try:
        return [int(piece) for piece in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not a comma separated list of integers'
                                         % (text,))


def _positive_int_arg(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError('%r is not a positive integer' % (text,))
    return value


def _point(rs, coords, flag):
    if len(coords) != rs.rank:
        raise UsageError('%s needs %d coordinates for %s, got %d'
                         % (flag, rs.rank, rs.name, len(coords)))
    return apartment_point(rs, coords)


class UsageError(Exception):
    pass


class FlagError(ValueError):

    """ A domain error traced back to the command line flag that caused it.
    """

    def __init__(self, flag, error):
        self.flag = flag
        self.error = error
        ValueError.__init__(self, '%s: %s' % (flag, error))


@contextmanager
def _blame(flag):
    try:
        yield
    except FlagError:
        raise
    except ValueError as e:
        raise FlagError(flag, e)


# subcommands

def cmd_roots(args):
    rs = args.type
    rows = []
    payload = {'type': rs.name, 'rank': rs.rank, 'dim_g': rs.dim_g,
               'marks': rs.marks.tolist(), 'cartan': rs.cartan.tolist(),
               'roots': []}
    for i in range(rs.n_roots):
        root = [int(c) for c in rs.roots[i]]
        coroot = [int(c) for c in rs.coroots[i]]
        payload['roots'].append({'index': i, 'root': root, 'coroot': coroot,
                                 'height': sum(root)})
        rows.append([i, root, coroot, sum(root)])
    return result(payload, ['index', 'root', 'coroot', 'height'], rows)


def cmd_alcove(args):
    rs = args.type
    rows, payload = [], {'type': rs.name, 'vertices': []}
    for v in alcove_vertices(rs):
        d = descriptor(rs, v)
        payload['vertices'].append({'theta': v.to_json(),
                                    'hyperspecial': d.is_hyperspecial})
        rows.append([v.to_json(), d.is_hyperspecial])
    return result(payload, ['vertex', 'hyperspecial'], rows)


def cmd_parahoric(args):
    rs = args.type
    theta = _point(rs, args.theta, '--theta')
    with _blame('--theta'):
        d = descriptor(rs, theta)
    payload = d.to_json()
    payload['facet_dimension'] = d.facet.dimension
    payload['levi_roots'] = [[int(c) for c in rs.roots[i]]
                             for i in sorted(levi_roots(rs, d.theta))]
    if d.is_standard:
        payload['closed_fiber_parabolic'] = sorted(closed_fiber_parabolic(rs, d.theta))
    rows = [[[int(c) for c in rs.roots[i]], int(m)]
            for i, m in enumerate(d.exponents)]
    return result(payload, ['root', 'm'], rows)


def cmd_localtype(args):
    rs = args.type
    if args.theta is not None:
        if args.d is not None or args.delta is not None:
            raise UsageError('--theta excludes --d and --delta')
        theta = _point(rs, args.theta, '--theta')
        with _blame('--theta'):
            lt = local_rep_of_weight(rs, theta)
    else:
        if args.d is None or args.delta is None:
            raise UsageError('give --theta, or both --d and --delta')
        if len(args.delta) != rs.rank:
            raise UsageError('--delta needs %d coordinates for %s'
                             % (rs.rank, rs.name))
        with _blame('--d/--delta'):
            lt = local_type(rs, args.d, args.delta)
    payload = lt.to_json()
    payload['weight'] = lt.weight().to_json()
    payload['root_group_action'] = [root_group_action(rs, lt, i)
                                    for i in range(rs.n_roots)]
    rows = [[[int(c) for c in rs.roots[i]], a]
            for i, a in enumerate(payload['root_group_action'])]
    return result(payload, ['root', 'zeta exponent'], rows)


def cmd_hyperspecial(args):
    table = hyperspecial_table(args.max_rank)
    payload = [{'type': '%s%d' % (letter, rank), 'vertices': vertices,
                'hyperspecial': count}
               for letter, rank, vertices, count in table]
    rows = [['%s%d' % (letter, rank), vertices, count]
            for letter, rank, vertices, count in table]
    return result(payload, ['type', 'vertices', 'hyperspecial'], rows)


def cmd_dimension(args):
    rs = args.type
    weights = [_point(rs, theta, '--theta') for theta in (args.theta or [])]
    with _blame('--genus'):
        spec = moduli_spec(rs, args.genus, weights)
    with _blame('--theta'):
        report = dimension_report(spec, with_mu_nu=args.mu_nu)
    payload = report.to_json()
    rows = [['dim_g', rs.dim_g],
            ['e', report.e_values],
            ['rep_space_dim', report.rep_space_dim],
            ['moduli_dim', report.moduli_dim],
            ['residue', report.residue],
            ['signature', (report.signature[0],) + report.signature[1]],
            ['euler_characteristic', report.euler_characteristic]]
    return result(payload, ['quantity', 'value'], rows)


def cmd_hecke(args):
    rs = args.type
    with _blame('--lower'):
        lower = descriptor(rs, _point(rs, args.lower, '--lower'))
    with _blame('--upper'):
        upper = descriptor(rs, _point(rs, args.upper, '--upper'))
    with _blame('--lower/--upper'):
        dim = hecke_fiber_dim(rs, lower, upper)
    payload = {'type': rs.name, 'lower': lower.theta.to_json(),
               'upper': upper.theta.to_json(), 'fiber_dim': dim}
    return result(payload, ['quantity', 'value'], [['fiber_dim', dim]])


def cmd_pardeg(args):
    with _blame('--weights'):
        pl = parabolic_line(args.deg, args.weights or [])
        value = pardeg(pl)
    payload = pl.to_json()
    payload['pardeg'] = format_fraction(value)
    return result(payload, ['quantity', 'value'], [['pardeg', value]])


def make_parser():
    parser = argparse.ArgumentParser(
        prog='parahorics',
        description='Invariants of parahoric Bruhat-Tits group data')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='table')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def add(name, func, help_text, typed=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if typed:
            p.add_argument('type', type=_type_arg, metavar='TYPE',
                           help='e.g. A2, G2, A1xA1')
        p.set_defaults(func=func)
        return p

    add('roots', cmd_roots, 'roots, coroots and marks')
    add('alcove', cmd_alcove, 'alcove vertices')
    p = add('parahoric', cmd_parahoric, 'parahoric descriptor of a point')
    p.add_argument('--theta', type=_fractions_arg, required=True)
    p = add('localtype', cmd_localtype, 'local type of a weight or of (d, delta)')
    p.add_argument('--theta', type=_fractions_arg)
    p.add_argument('--d', type=int)
    p.add_argument('--delta', type=_integers_arg)
    p = add('hyperspecial', cmd_hyperspecial, 'hyperspecial vertex counts',
            typed=False)
    p.add_argument('--max-rank', type=_positive_int_arg, default=8)
    p = add('dimension', cmd_dimension, 'moduli dimension formulas')
    p.add_argument('--genus', type=int, required=True)
    p.add_argument('--theta', type=_fractions_arg, action='append')
    p.add_argument('--mu-nu', action='store_true')
    p = add('hecke', cmd_hecke, 'Hecke fibre dimension')
    p.add_argument('--lower', type=_fractions_arg, required=True)
    p.add_argument('--upper', type=_fractions_arg, required=True)
    p = add('pardeg', cmd_pardeg, 'parabolic degree', typed=False)
    p.add_argument('--deg', type=int, required=True)
    p.add_argument('--weights', type=_fractions_arg)
    return parser


def run(argv=None, stdout=None, stderr=None):
    """ Run the command line, returning the exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = make_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        output = args.func(args)
    except UsageError as e:
        stderr.write('%s %s: error: %s\n' % (parser.prog, args.command, e))
        return 2
    except ValueError as e:
        stderr.write('%s %s: %s\n' % (parser.prog, args.command, e))
        return 1
    stdout.write(output.render(args.format) + '\n')
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
