"""Command-line surface: solve, minmax, oracle, generate, verify, untangle, dot."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .config import (Budgets, DEFAULT_APATH_BUDGET, DEFAULT_MINMAX_BUDGET,
                     DEFAULT_ORACLE_BUDGET)
from .driver import solve_cd, solve_uv
from .errors import (BudgetExceeded, InternalInvariantError, InvalidInput,
                     GraphFormatError, OddTrailsError)
from .fixtures import FAMILIES, fig2, fig6, fig8, hk, random_instance
from .gadget import build_gadget, to_dot as gadget_dot
from .graph_core import read_graph_document, to_dot
from .minmax import cover_from_certificate, minmax_rhs
from .oracle import find_odd_trail, nu_exact, tau_exact
from .trails import Trail, TrailCollection, check_pairwise_disjoint, verify_trail
from .untangle import untangle

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COVER = 1
EXIT_INTERNAL = 2
EXIT_USAGE = 64
EXIT_BUDGET = 65
EXIT_INVALID = 66


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def get_parser() -> argparse.ArgumentParser:
    common = Parser(add_help=False)
    common.add_argument('--input', default=None, help='graph JSON file (default: read stdin)')
    common.add_argument('--u', type=int, default=None, help='terminal u (default: from the document, else 0)')
    common.add_argument('--v', type=int, default=None, help='terminal v (default: from the document, else 1)')
    common.add_argument('--apath-budget', type=int, default=DEFAULT_APATH_BUDGET, help='max gadget nodes for the exact path search')
    common.add_argument('--oracle-budget', type=int, default=DEFAULT_ORACLE_BUDGET, help='max edges for the exact oracle')
    common.add_argument('--minmax-budget', type=int, default=DEFAULT_MINMAX_BUDGET, help='max vertices for certificate enumeration')
    common.add_argument('--trace', action='store_true', help='write one JSON line per untangling step to stderr')
    common.add_argument('--verbose', action='store_true', help='log progress to stderr')

    parser = Parser(prog='trailsolve', description='Pack and cover odd (u,v)-trails in multigraphs')
    parser.add_argument('--version', action='version', version=f'trailsolve {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    solve = sub.add_parser('solve', parents=[common], help='k disjoint odd trails or a small cover')
    solve.add_argument('--k', type=int, required=True, help='number of trails wanted')
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument('--ss', action='store_true', help='solve for odd (u,u)-trails')
    mode.add_argument('--cd', nargs=2, metavar=('C=..', 'D=..'), help='terminal sets, e.g. C=0,2 D=1')

    minmax = sub.add_parser('minmax', parents=[common], help='optimal bipartite certificate at u')
    minmax.add_argument('--with-cover', action='store_true', help='include the cover derived from the certificate')

    oracle = sub.add_parser('oracle', parents=[common], help='exact brute-force numbers')
    oracle.add_argument('question', choices=['nu', 'tau', 'exists'])

    generate = sub.add_parser('generate', parents=[common], help='emit a fixture graph')
    generate.add_argument('--family', choices=FAMILIES, required=True)
    generate.add_argument('--k', type=int, default=1)
    generate.add_argument('--m', type=int, default=2, help='u-w-v paths for hk/fig8; edge count for random')
    generate.add_argument('--n', type=int, default=6, help='vertex count for random')
    generate.add_argument('--seed', type=int, default=0)
    generate.add_argument('--sigma-prob', type=float, default=1.0)
    generate.add_argument('--parallel-prob', type=float, default=0.2)

    verify = sub.add_parser('verify', parents=[common], help='check claimed trails or a claimed cover')
    verify.add_argument('what', choices=['trails', 'cover'])
    verify.add_argument('--claim', required=True, help='JSON file holding "trails" or "cover"')

    unt = sub.add_parser('untangle', parents=[common], help='turn odd trails with ends in {u,v} into odd (u,v)-trails')
    unt.add_argument('--claim', required=True, help='JSON file holding "trails"')

    dot = sub.add_parser('dot', parents=[common], help='DOT export of the graph')
    dot.add_argument('--gadget', action='store_true', help='export the gadget graph at u instead')
    return parser


def _read_text(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f'cannot read {path}: {exc}') from exc


def _load(args):
    g, terminals = read_graph_document(_read_text(args.input))
    u = args.u if args.u is not None else terminals.get('u', 0)
    v = args.v if args.v is not None else terminals.get('v', 1)
    return g, g.check_vertex(u), g.check_vertex(v)


def _load_claim(path: str) -> dict:
    try:
        doc = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f'claim is not JSON: {exc}') from exc
    if not isinstance(doc, dict):
        raise GraphFormatError('claim must be a JSON object')
    return doc


def _parse_set(text: str, name: str) -> set[int]:
    label, _, body = text.partition('=')
    if label.strip().upper() != name or not body:
        raise GraphFormatError(f'expected {name}=<vertices>, got {text!r}')
    try:
        return {int(x) for x in body.split(',') if x.strip()}
    except ValueError as exc:
        raise GraphFormatError(f'bad vertex list {body!r}') from exc


def _emit(doc):
    print(json.dumps(doc))


def _trace_line(record):
    print(json.dumps(record.to_json()), file=sys.stderr)


def _solve(args) -> int:
    g, u, v = _load(args)
    budgets = Budgets.from_args(args)
    trace = _trace_line if args.trace else None
    if args.cd:
        c, d = _parse_set(args.cd[0], 'C'), _parse_set(args.cd[1], 'D')
        for x in c | d:
            g.check_vertex(x)
        outcome = solve_cd(g, c, d, args.k, budgets, trace)
    elif args.ss:
        outcome = solve_uv(g, u, u, args.k, budgets)
    else:
        outcome = solve_uv(g, u, v, args.k, budgets, trace)
    _emit(outcome.to_json())
    return EXIT_OK if outcome.is_packing else EXIT_COVER


def _minmax(args) -> int:
    g, u, _ = _load(args)
    cert = minmax_rhs(g, u, args.minmax_budget)
    doc = cert.to_json()
    if args.with_cover:
        doc['cover'] = sorted(cover_from_certificate(g, u, cert))
    _emit(doc)
    return EXIT_OK


def _oracle(args) -> int:
    g, u, v = _load(args)
    if args.question == 'nu':
        _emit({'nu': nu_exact(g, u, v, args.oracle_budget)})
    elif args.question == 'tau':
        size, cover = tau_exact(g, u, v, args.oracle_budget)
        _emit({'tau': size, 'cover': sorted(cover)})
    else:
        found = find_odd_trail(g, u, v, budget=args.oracle_budget)
        _emit({'exists': found is not None,
               'trail': found.to_json() if found is not None else None})
    return EXIT_OK


def _generate(args) -> int:
    if args.family == 'fig2':
        inst = fig2(args.k)
    elif args.family == 'fig6':
        inst = fig6(args.k)
    elif args.family == 'hk':
        inst = hk(args.k, args.m)
    elif args.family == 'fig8':
        inst = fig8(args.k, args.m)
    else:
        inst = random_instance(args.seed, args.n, args.m, args.parallel_prob, args.sigma_prob)
    _emit(inst.graph.to_json(inst.terminals))
    return EXIT_OK


def _claimed_trails(doc: dict) -> list[Trail]:
    if not isinstance(doc.get('trails'), list):
        raise GraphFormatError('claim has no "trails" list')
    return [Trail.from_json(t) for t in doc['trails']]


def _verify(args) -> int:
    g, u, v = _load(args)
    doc = _load_claim(args.claim)
    if args.what == 'trails':
        trails = _claimed_trails(doc)
        for i, t in enumerate(trails):
            problem = verify_trail(g, t, (u, v), want_odd=True)
            if problem is not None:
                raise InvalidInput(f'trail {i}: {problem.kind}: {problem.message}')
        shared = check_pairwise_disjoint(trails)
        if shared is not None:
            raise InvalidInput(f'edge {shared} is used by two trails')
        _emit({'valid': True, 'trails': len(trails)})
        return EXIT_OK
    try:
        cover = frozenset(int(e) for e in doc['cover'])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError('claim has no "cover" list of edge ids') from exc
    survivor = find_odd_trail(g, u, v, blocked=cover, budget=args.oracle_budget)
    if survivor is not None:
        raise InvalidInput(f'cover misses the odd trail {survivor.to_json()}')
    _emit({'valid': True, 'cover': sorted(cover)})
    return EXIT_OK


def _untangle(args) -> int:
    g, u, v = _load(args)
    collection = TrailCollection.build(g, u, v, _claimed_trails(_load_claim(args.claim)))
    trace = _trace_line if args.trace else None
    trails = untangle(g, u, v, collection, trace)
    _emit({'trails': [t.to_json() for t in trails]})
    return EXIT_OK


def _dot(args) -> int:
    g, u, _ = _load(args)
    text = gadget_dot(build_gadget(g, u)) if args.gadget else to_dot(g)
    sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    'solve': _solve,
    'minmax': _minmax,
    'oracle': _oracle,
    'generate': _generate,
    'verify': _verify,
    'untangle': _untangle,
    'dot': _dot,
}


def main(argv=None) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except InvalidInput as exc:
        LOGGER.error('invalid input: %s', exc)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        LOGGER.error('%s', exc)
        return EXIT_BUDGET
    except InternalInvariantError as exc:
        LOGGER.error('internal error: %s', exc)
        return EXIT_INTERNAL
    except OddTrailsError as exc:
        LOGGER.error('%s', exc)
        return EXIT_INTERNAL
