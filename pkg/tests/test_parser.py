import pytest
from argparse import Namespace

from oddtrails.cli import EXIT_USAGE, get_parser
from oddtrails.config import Budgets


def test_parser_accepts_solve_flags():
    parser = get_parser()
    args = parser.parse_args(['solve', '--k', '2', '--input', 'g.json', '--u', '3', '--v', '4', '--trace'])
    assert (args.command, args.k, args.input, args.u, args.v, args.trace) == ('solve', 2, 'g.json', 3, 4, True)
    assert args.cd is None and not args.ss


def test_parser_budget_defaults():
    args = get_parser().parse_args(['oracle', 'nu'])
    assert (args.apath_budget, args.oracle_budget, args.minmax_budget) == (40, 20, 16)
    args = get_parser().parse_args(['oracle', 'tau', '--oracle-budget', '32'])
    assert args.oracle_budget == 32


def test_parser_terminal_sets():
    args = get_parser().parse_args(['solve', '--k', '1', '--cd', 'C=0,2', 'D=1'])
    assert args.cd == ['C=0,2', 'D=1']


def test_parser_generate_defaults():
    args = get_parser().parse_args(['generate', '--family', 'hk'])
    assert (args.k, args.m, args.seed) == (1, 2, 0)


@pytest.mark.parametrize('argv', [
    [],
    ['solve'],
    ['solve', '--k', '1', '--ss', '--cd', 'C=0', 'D=1'],
    ['oracle', 'omega'],
    ['generate', '--family', 'petersen'],
])
def test_parser_usage_errors_exit_64(argv):
    with pytest.raises(SystemExit) as err:
        get_parser().parse_args(argv)
    assert err.value.code == EXIT_USAGE


def test_budgets_keep_explicit_zero():
    args = get_parser().parse_args(['oracle', 'nu', '--apath-budget', '0', '--oracle-budget', '0', '--minmax-budget', '0'])
    assert Budgets.from_args(args) == Budgets(apath=0, oracle=0, minmax=0)


def test_budgets_default_when_missing():
    assert Budgets.from_args(Namespace()) == Budgets()
    assert Budgets.from_args(Namespace(apath_budget=None, oracle_budget=3)) == Budgets(oracle=3)
