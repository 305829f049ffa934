from dataclasses import dataclass

DEFAULT_APATH_BUDGET = 40    # nodes of the gadget graph, i.e. 20 edges of G
DEFAULT_ORACLE_BUDGET = 20   # edges
DEFAULT_MINMAX_BUDGET = 16   # vertices, 3^(n-1) assignments


def _given(args, name: str, default: int) -> int:
    value = getattr(args, name, None)
    return default if value is None else value


@dataclass(frozen=True)
class Budgets:
    """Caps for the exact exponential searches.

    Exceeding a cap raises ``BudgetExceeded``; nothing falls back to an
    approximation.
    """
    apath: int = DEFAULT_APATH_BUDGET
    oracle: int = DEFAULT_ORACLE_BUDGET
    minmax: int = DEFAULT_MINMAX_BUDGET

    @classmethod
    def from_args(cls, args) -> 'Budgets':
        return cls(
            apath=_given(args, 'apath_budget', DEFAULT_APATH_BUDGET),
            oracle=_given(args, 'oracle_budget', DEFAULT_ORACLE_BUDGET),
            minmax=_given(args, 'minmax_budget', DEFAULT_MINMAX_BUDGET),
        )
