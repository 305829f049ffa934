import pytest

from oddtrails.graph_core import Multigraph
from oddtrails.trails import Trail


def _all_trails(g: Multigraph, start: int, end: int, max_len: int | None = None):
    """Every trail from start to end with at least one edge, by plain DFS."""
    found = []

    def step(vertices, edges):
        x = vertices[-1]
        if edges and x == end:
            found.append(Trail(tuple(vertices), tuple(edges)))
        if max_len is not None and len(edges) >= max_len:
            return
        for eid, y in g.adjacency(x):
            if eid not in edges:
                step(vertices + [y], edges + [eid])

    step([start], [])
    return found


@pytest.fixture(scope="session")
def all_trails():
    return _all_trails


@pytest.fixture
def triangle():
    # s=0, a=1, b=2
    return Multigraph(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)])
