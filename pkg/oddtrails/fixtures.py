"""Generators for the tight example families and for seeded random multigraphs.

Vertex numbering is canonical: u = 0, v = 1, then the blocks in order, so
the emitted JSON is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import random

from .errors import BadParameter
from .graph_core import Multigraph, identify_vertices
from .trails import Trail

U, V = 0, 1


@dataclass(frozen=True)
class Instance:
    graph: Multigraph
    u: int
    v: int
    family: str
    params: dict = field(default_factory=dict)
    names: tuple[str, ...] = ()
    nu: int | None = None
    tau: int | None = None
    lam: int | None = None
    trail_family: tuple[Trail, ...] = ()

    @property
    def terminals(self) -> dict:
        return {'u': self.u, 'v': self.v}


class _Builder:
    def __init__(self):
        self.names = ['u', 'v']
        self.edges = []

    def vertex(self, name: str) -> int:
        self.names.append(name)
        return len(self.names) - 1

    def edge(self, a: int, b: int, times: int = 1) -> list[int]:
        ids = []
        for _ in range(times):
            ids.append(len(self.edges))
            self.edges.append((len(self.edges), a, b))
        return ids

    def graph(self) -> Multigraph:
        return Multigraph(len(self.names), self.edges)


def _positive(name: str, value: int):
    if not isinstance(value, int) or value < 1:
        raise BadParameter(f'{name} must be a positive integer, got {value!r}')


def fig2(k: int) -> Instance:
    """nu(u,v) = k and tau(u,v) = 2k + 1; a minimum (u,v)-cut has 2k + 1 edges."""
    _positive('k', k)
    b = _Builder()
    for i in range(1, k + 1):
        a_, b_, c, d, e, f, g_, h = (b.vertex(f'{n}{i}') for n in 'abcdefgh')
        for x, y in ((U, a_), (U, b_), (a_, b_), (a_, c), (b_, c), (c, d), (c, e),
                     (d, e), (d, f), (e, f), (f, g_), (f, h), (g_, V), (h, V), (g_, h)):
            b.edge(x, y)
    w = b.vertex('w')
    b.edge(U, w)
    b.edge(V, w)
    return Instance(b.graph(), U, V, 'fig2', {'k': k}, tuple(b.names),
                    nu=k, tau=2 * k + 1, lam=2 * k + 1)


def fig6(k: int) -> Instance:
    """lambda(u,v) = 2k + 1 and nu(u,v) = k, yet the k + 1 listed odd trails
    with ends in {u, v} are edge-disjoint."""
    _positive('k', k)
    b = _Builder()
    family = []
    for i in range(1, k):
        x, y = b.vertex(f'x{i}'), b.vertex(f'y{i}')
        ux, = b.edge(U, x)
        b.edge(U, y)
        b.edge(V, x)
        vy, = b.edge(V, y)
        xy, = b.edge(x, y)
        family.append(Trail((U, x, y, V), (ux, xy, vy)))
    z = [None] + [b.vertex(f'z{i}') for i in range(1, 7)]
    uz1, = b.edge(U, z[1])
    uz2, = b.edge(U, z[2])
    z12, = b.edge(z[1], z[2])
    for x, y in ((z[1], z[3]), (z[2], z[4]), (z[3], z[5]), (z[4], z[6])):
        b.edge(x, y)
    z56, = b.edge(z[5], z[6])
    vz5, = b.edge(V, z[5])
    vz6, = b.edge(V, z[6])
    w = b.vertex('w')
    b.edge(U, w)
    b.edge(V, w)
    family.append(Trail((U, z[1], z[2], U), (uz1, z12, uz2)))
    family.append(Trail((V, z[5], z[6], V), (vz5, z56, vz6)))
    return Instance(b.graph(), U, V, 'fig6', {'k': k}, tuple(b.names),
                    nu=k, lam=2 * k + 1, trail_family=tuple(family))


def hk(k: int, m: int) -> Instance:
    """nu(u,v) = k and tau(u,v) = 2k; ``m`` parallel u-w-v paths stand in for
    the long run of such paths that keeps every (u,v)-cut large."""
    _positive('k', k)
    _positive('m', m)
    b = _Builder()
    for i in range(1, k + 1):
        x, y, z = b.vertex(f'x{i}'), b.vertex(f'y{i}'), b.vertex(f'z{i}')
        b.edge(U, x, 2)
        b.edge(x, y, 2)
        b.edge(y, z, 2)
        b.edge(z, V)
        for hub, names in ((x, 'ab'), (y, 'cd'), (z, 'ef')):
            p, q = (b.vertex(f'{n}{i}') for n in names)
            b.edge(hub, p)
            b.edge(hub, q)
            b.edge(p, q)
    for j in range(1, m + 1):
        w = b.vertex(f'w{j}')
        b.edge(U, w)
        b.edge(w, V)
    return Instance(b.graph(), U, V, 'hk', {'k': k, 'm': m}, tuple(b.names),
                    nu=k, tau=2 * k, lam=k + m)


def fig8(k: int, m: int) -> Instance:
    """hk(k, m) with u and v identified into s; nu(s,s) = k, tau(s,s) = 2k."""
    base = hk(k, m)
    g, vertex_map, _ = identify_vertices(base.graph, base.u, base.v)
    s = vertex_map[base.u]
    names = [None] * g.vertex_count
    for old, new in enumerate(vertex_map):
        names[new] = names[new] or base.names[old]
    names[s] = 's'
    return Instance(g, s, s, 'fig8', {'k': k, 'm': m}, tuple(names), nu=k, tau=2 * k)


def random_multigraph(seed: int, n: int, m: int, parallel_prob: float = 0.2,
                      sigma_prob: float = 1.0) -> Multigraph:
    if n < 2:
        raise BadParameter(f'need at least two vertices, got {n}')
    if m < 0:
        raise BadParameter(f'edge count must be non-negative, got {m}')
    for name, p in (('parallel_prob', parallel_prob), ('sigma_prob', sigma_prob)):
        if not 0.0 <= p <= 1.0:
            raise BadParameter(f'{name} must lie in [0, 1], got {p}')
    rng = random.Random(seed)
    edges, sigma = [], []
    for eid in range(m):
        if edges and rng.random() < parallel_prob:
            _, a, b = rng.choice(edges)
        else:
            a, b = rng.sample(range(n), 2)
        edges.append((eid, a, b))
        if rng.random() < sigma_prob:
            sigma.append(eid)
    return Multigraph(n, edges, sigma)


def random_instance(seed: int, n: int, m: int, parallel_prob: float = 0.2,
                    sigma_prob: float = 1.0) -> Instance:
    g = random_multigraph(seed, n, m, parallel_prob, sigma_prob)
    return Instance(g, U, V, 'random', {'seed': seed, 'n': n, 'm': m},
                    tuple(str(x) for x in range(n)))


def vertex_names(instance: Instance) -> dict:
    return {i: name for i, name in enumerate(instance.names)}


FAMILIES = ('fig2', 'fig6', 'hk', 'fig8', 'random')
