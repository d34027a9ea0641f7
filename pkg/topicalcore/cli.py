# -*- coding: utf-8 -*-
"""
    topicalcore.cli
    ~~~~~~~~~~~~~~~

    The `topical` command. Every command takes one or more .tfn files, prints JSON (or DOT, or plain text)
    on stdout and diagnostics on stderr.

    Exit codes: 0 success, 1 the solver did not converge or failed numerically, 2 input or usage error.

    JSON floats are printed with repr, the shortest string that reads back to the same double, rather than
    with a fixed 17 significant digits.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import argparse
import json
import logging
import math
import sys
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
import numpy as np
from .api import TopicalAPI
from .config import load_config, settings_from_config, DEFAULT_PROFILE
from .exceptions import TopicalException
from .functions import is_convex_syntactic
from .graphs import strongly_connected_components, probe_diverges
from ._internal import indicator_subsets

__author__ = 'topicalcore authors'

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_INPUT = 2

COMMANDS = ('graph', 'aggregate', 'check', 'eigen', 'cycletime', 'cw', 'recession', 'slice-cert', 'diameter')
DOT_COMMANDS = frozenset(['graph', 'aggregate'])
GRAPH_KINDS = ('associated', 'dual', 'syntactic', 'two-sided')

FORMAT_JSON = 'json'
FORMAT_DOT = 'dot'
FORMAT_TEXT = 'text'


class RunConfig(namedtuple('RunConfig', 'command paths tol k_max seed output_format lam mu d_cap samples radius '
                                        'probe_scale trials exhaustive_max_dim graph_kind probe jobs')):
    __slots__ = ()


Outcome = namedtuple('Outcome', 'path code payload error')


def build_parser():
    parser = argparse.ArgumentParser(prog='topical',
                                     description='Analyse topical functions written in the .tfn format.')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('paths', nargs='+', metavar='FILE', help='input .tfn files')
    parser.add_argument('--tol', type=float, default=None, help='solver tolerance')
    parser.add_argument('--k-max', dest='k_max', type=int, default=None, help='iteration horizon')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--samples', type=int, default=None, help='Collatz-Wielandt sample size')
    parser.add_argument('--trials', type=int, default=None, help='random starts for the recession check')
    parser.add_argument('--lambda', dest='lam', type=float, default=None, help='super-eigenspace level')
    parser.add_argument('--mu', type=float, default=None, help='sub-eigenspace level')
    parser.add_argument('--graph', dest='graph_kind', choices=GRAPH_KINDS, default='associated',
                        help='graph exported by `graph --dot`')
    parser.add_argument('--probe', action='store_true', help='cross-check divergence numerically (check)')
    parser.add_argument('--dot', action='store_true')
    parser.add_argument('--json', action='store_true')
    parser.add_argument('--text', action='store_true')
    parser.add_argument('--jobs', type=int, default=1, help='worker processes across input files')
    parser.add_argument('--config', default=None, help='configuration file')
    parser.add_argument('--profile', default=DEFAULT_PROFILE, help='configuration profile')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def _pick(flag, setting):
    return setting if flag is None else flag


def make_run_config(parser, args):
    """
    Validate flag combinations and merge flags over the configuration profile.
    """
    if args.dot and (args.json or args.text):
        parser.error('--dot cannot be combined with --json or --text')
    if args.json and args.text:
        parser.error('--json and --text are exclusive')
    if args.dot and args.command not in DOT_COMMANDS:
        parser.error('--dot is only available for graph and aggregate')
    if args.command == 'diameter' and (args.lam is None) == (args.mu is None):
        parser.error('diameter needs exactly one of --lambda and --mu')
    if args.jobs < 1:
        parser.error('--jobs must be at least 1')

    try:
        settings = settings_from_config(load_config(args.config, profile=args.profile))
    except (TopicalException, OSError) as e:
        parser.error(str(e))

    config = RunConfig(
        command=args.command,
        paths=list(args.paths),
        tol=_pick(args.tol, settings.tol),
        k_max=_pick(args.k_max, settings.k_max),
        seed=_pick(args.seed, settings.seed),
        output_format=FORMAT_DOT if args.dot else FORMAT_TEXT if args.text else FORMAT_JSON,
        lam=args.lam,
        mu=args.mu,
        d_cap=settings.d_cap,
        samples=_pick(args.samples, settings.samples),
        radius=settings.radius,
        probe_scale=settings.probe_scale,
        trials=_pick(args.trials, settings.trials),
        exhaustive_max_dim=settings.exhaustive_max_dim,
        graph_kind=args.graph_kind,
        probe=args.probe,
        jobs=args.jobs,
    )
    if not config.tol > 0:
        parser.error('--tol must be positive')
    if config.k_max < 1:
        parser.error('--k-max must be at least 1')
    if config.samples < 1:
        parser.error('--samples must be at least 1')
    return config


def _components(g):
    return [sorted(set().union(*[g.labels[v] for v in members])) for members in strongly_connected_components(g)]


def run_graph(f, config):
    if config.output_format == FORMAT_DOT:
        return TopicalAPI.associated_graph(f, kind=config.graph_kind).to_dot(), EXIT_OK
    payload = {}
    for kind in GRAPH_KINDS:
        g = TopicalAPI.associated_graph(f, kind=kind)
        payload[kind] = dict(g.to_json(), components=_components(g), strongly_connected=g.is_strongly_connected())
    return payload, EXIT_OK


def run_aggregate(f, config):
    tower = TopicalAPI.aggregate(f)
    if config.output_format == FORMAT_DOT:
        return ''.join(level.to_dot(name='G{}'.format(k)) for k, level in enumerate(tower.levels, start=1)), EXIT_OK
    return tower.as_dict(), EXIT_OK


def _probe_disagreements(f, config):
    if f.dim <= config.exhaustive_max_dim:
        subsets = list(indicator_subsets(f.dim)) + [frozenset(range(1, f.dim + 1))]
    else:
        subsets = [frozenset([j]) for j in range(1, f.dim + 1)]
    disagreements = []
    for i in range(1, f.dim + 1):
        for subset in subsets:
            if f.coordinate(i).diverges(subset) != probe_diverges(f, i, subset):
                disagreements.append({'i': i, 'J': sorted(subset)})
    return disagreements


def run_check(f, config):
    tower = TopicalAPI.aggregate(f)
    indecomposable, witness = TopicalAPI.is_indecomposable(f)
    if indecomposable:
        verdict = 'indecomposable'
    else:
        verdict = 'decomposable, witness I={} J={}'.format(sorted(witness.I), sorted(witness.J))
    payload = {
        'strongly_connected': tower.levels[0].is_strongly_connected(),
        'indecomposable': indecomposable,
        'stabilized_at': tower.stabilized_at,
        'convex_syntactic': is_convex_syntactic(f),
        'two_sided_strongly_connected': TopicalAPI.associated_graph(f, kind='two-sided').is_strongly_connected(),
        'witness': None if witness is None else witness.as_dict(),
        'verdict': verdict,
    }
    if config.probe:
        payload['probe_disagreements'] = _probe_disagreements(f, config)
    return payload, EXIT_OK


def run_eigen(f, config):
    report = TopicalAPI.eigen_solve(f, tol=config.tol, k_max=config.k_max, d_cap=config.d_cap)
    payload = report.as_dict()
    if report.converged:
        payload['verdict'] = 'eigenvector found'
        return payload, EXIT_OK
    payload['verdict'] = 'no boundedness certificate at horizon {}'.format(config.k_max)
    return payload, EXIT_SOLVER


def run_cycletime(f, config):
    return TopicalAPI.cycle_times(f, k_max=config.k_max).as_dict(), EXIT_OK


def run_cw(f, config):
    # the last point of the eigenvector search is sampled alongside 0
    report = TopicalAPI.eigen_solve(f, tol=config.tol, k_max=config.k_max, d_cap=config.d_cap)
    values = TopicalAPI.collatz_wielandt(f, samples=config.samples, seed=config.seed, radius=config.radius,
                                         anchors=[report.eigenvector])
    return values.as_dict(), EXIT_OK


def run_recession(f, config):
    certificate = TopicalAPI.slice_certificate(f, trials=config.trials, seed=config.seed,
                                               exhaustive_max_dim=config.exhaustive_max_dim,
                                               scale=config.probe_scale)
    payload = certificate.as_dict()
    payload['numeric_agreement'] = certificate.recession.numeric_agreement
    return payload, EXIT_OK


def run_slice_cert(f, config):
    certificate = TopicalAPI.slice_certificate(f, trials=config.trials, seed=config.seed,
                                               exhaustive_max_dim=config.exhaustive_max_dim,
                                               scale=config.probe_scale)
    return certificate.as_dict(), EXIT_OK


def run_diameter(f, config):
    bound = TopicalAPI.diameter_bound(f, lam=config.lam, mu=config.mu)
    payload = bound.as_dict()
    payload['lambda'] = config.lam
    payload['mu'] = config.mu
    return payload, EXIT_OK


HANDLERS = {
    'graph': run_graph,
    'aggregate': run_aggregate,
    'check': run_check,
    'eigen': run_eigen,
    'cycletime': run_cycletime,
    'cw': run_cw,
    'recession': run_recession,
    'slice-cert': run_slice_cert,
    'diameter': run_diameter,
}


def run_one(config, path):
    """
    Load one file and run the configured command on it. Top level so that worker processes can pickle it.

    :returns Outcome:
    """
    try:
        f = TopicalAPI.load(path)
    except (TopicalException, OSError, UnicodeDecodeError) as e:
        return Outcome(path=path, code=EXIT_INPUT, payload=None, error=str(e))
    try:
        payload, code = HANDLERS[config.command](f, config)
    except ArithmeticError as e:
        return Outcome(path=path, code=EXIT_SOLVER, payload=None, error=str(e))
    except TopicalException as e:
        return Outcome(path=path, code=EXIT_INPUT, payload=None, error=str(e))
    return Outcome(path=path, code=code, payload=payload, error=None)


def run(config):
    """
    :returns: (exit code, serialized output)
    """
    if config.jobs > 1 and len(config.paths) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            outcomes = list(executor.map(run_one, repeat(config), config.paths))
    else:
        outcomes = [run_one(config, path) for path in config.paths]

    for outcome in outcomes:
        if outcome.error is not None:
            logging.error(u'{}: {}'.format(outcome.path, outcome.error))
    code = max(outcome.code for outcome in outcomes)
    return code, render(config, outcomes)


def _plain(value):
    """
    Replace numpy scalars and arrays by Python values and non-finite floats by None.
    """
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def to_json(payload):
    """
    Floats are written in Python's shortest round-trip form, which reads back to the same double as 17
    significant digits would. Infinities and NaN become null.
    """
    return json.dumps(_plain(payload), sort_keys=True, indent=2, allow_nan=False) + '\n'


def to_text(payload, prefix=''):
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append('{}{}:'.format(prefix, key))
            lines.append(to_text(value, prefix=prefix + '  ').rstrip('\n'))
        elif isinstance(value, str) and '\n' in value:
            lines.append('{}{}:'.format(prefix, key))
            lines.extend(prefix + '  ' + line for line in value.rstrip('\n').split('\n'))
        else:
            lines.append('{}{}: {}'.format(prefix, key, json.dumps(_plain(value), sort_keys=True)))
    return '\n'.join(lines) + '\n'


def render(config, outcomes):
    if config.output_format == FORMAT_DOT:
        chunks = []
        for outcome in outcomes:
            if outcome.payload is None:
                continue
            if len(outcomes) > 1:
                chunks.append('// {}\n'.format(outcome.path))
            chunks.append(outcome.payload)
        return ''.join(chunks)

    def body(outcome):
        return {'error': outcome.error} if outcome.payload is None else outcome.payload

    if len(outcomes) == 1:
        payload = body(outcomes[0])
    else:
        payload = {outcome.path: body(outcome) for outcome in outcomes}
    return to_text(payload) if config.output_format == FORMAT_TEXT else to_json(payload)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')

    config = make_run_config(parser, args)
    code, output = run(config)
    sys.stdout.write(output)
    return code


if __name__ == '__main__':
    sys.exit(main())
