"""The Z2-labelled gadget graph H of an (s,s)-trail instance.

Every vertex x of G becomes a clique [x] with one node per edge at x; clique
edges carry label 0. Each edge e = xy of G becomes the cross edge
(x,e)-(y,e), labelled 1 when e is signed. Edge-disjoint (s,s)-trails of G
correspond to vertex-disjoint [s]-paths of H, with parity equal to the
label sum. With a set T of terminals, A is the union of their cliques and
the paths correspond to edge-disjoint (T,T)-trails.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Iterable, Sequence, Union

from .errors import BadParameter, EmptyTrail, EndpointsNotInA, NotAPath
from .graph_core import Multigraph
from .trails import Trail

LOGGER = logging.getLogger(__name__)

CLIQUE = 'clique'
CROSS = 'cross'


@dataclass(frozen=True)
class GadgetGraph:
    source: Multigraph
    terminals: frozenset[int]
    nodes: tuple[tuple[int, int], ...]          # node -> (vertex of G, edge id of G)
    h: Multigraph                               # sigma = the 1-labelled edges
    kinds: dict                                 # H edge id -> CLIQUE | CROSS
    a_set: frozenset[int]
    node_of_g_edge: dict                        # (G edge id, vertex) -> node
    g_edge_of_h_edge: dict                      # cross edge id -> G edge id
    partner: tuple[int, ...]                    # node -> other end of its cross edge

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def label(self, h_edge: int) -> int:
        return int(h_edge in self.h.sigma)

    def g_edge_of_node(self, node: int) -> int:
        return self.nodes[node][1]

    def edge_between(self, a: int, b: int):
        """The H edge id joining two nodes, or None (H is simple)."""
        for eid, y in self.h.adjacency(a):
            if y == b:
                return eid
        return None


def build_gadget(g: Multigraph, s: Union[int, Iterable[int]]) -> GadgetGraph:
    """Gadget whose A-set is the clique of ``s``, or of every vertex when
    ``s`` is a set of terminals."""
    terminals = frozenset((s,) if isinstance(s, int) else s)
    if not terminals:
        raise BadParameter('the gadget needs at least one terminal')
    for x in terminals:
        g.check_vertex(x)
    nodes = sorted((x, e.id) for e in g.edges for x in (e.u, e.v))
    index = {pair: i for i, pair in enumerate(nodes)}
    h_edges, kinds, signed, cross_map = [], {}, [], {}
    partner = [0] * len(nodes)
    for e in g.edges:
        a, b = index[(e.u, e.id)], index[(e.v, e.id)]
        hid = len(h_edges)
        h_edges.append((hid, a, b))
        kinds[hid] = CROSS
        cross_map[hid] = e.id
        partner[a], partner[b] = b, a
        if e.id in g.sigma:
            signed.append(hid)
    by_vertex = {}
    for i, (x, _) in enumerate(nodes):
        by_vertex.setdefault(x, []).append(i)
    for x in sorted(by_vertex):
        for a, b in combinations(by_vertex[x], 2):
            hid = len(h_edges)
            h_edges.append((hid, a, b))
            kinds[hid] = CLIQUE
    h = Multigraph(len(nodes), h_edges, signed)
    gg = GadgetGraph(
        source=g, terminals=terminals, nodes=tuple(nodes), h=h, kinds=kinds,
        a_set=frozenset(i for x in terminals for i in by_vertex.get(x, ())),
        node_of_g_edge={(eid, x): i for (x, eid), i in index.items()},
        g_edge_of_h_edge=cross_map, partner=tuple(partner),
    )
    LOGGER.debug('gadget for terminals %s: %d nodes, %d edges, |A|=%d',
                 sorted(terminals), len(nodes), len(h_edges), len(gg.a_set))
    return gg


def is_a_path(gg: GadgetGraph, nodes: Sequence[int]) -> bool:
    if not nodes or len(set(nodes)) != len(nodes):
        return False
    if any(not 0 <= x < gg.node_count for x in nodes):
        return False
    if any(gg.edge_between(a, b) is None for a, b in zip(nodes, nodes[1:])):
        return False
    return nodes[0] in gg.a_set and nodes[-1] in gg.a_set


def a_path_gamma(gg: GadgetGraph, nodes: Sequence[int]) -> int:
    """Label sum (mod 2) along a node sequence of H."""
    return sum(gg.label(gg.edge_between(a, b)) for a, b in zip(nodes, nodes[1:])) % 2


def path_to_trail(gg: GadgetGraph, nodes: Sequence[int]) -> Trail:
    """Map an A-path of H to the trail of G along its cross edges."""
    nodes = tuple(nodes)
    if not nodes or len(set(nodes)) != len(nodes):
        raise NotAPath('an H-path must be non-empty and must not repeat nodes')
    for x in nodes:
        if not 0 <= x < gg.node_count:
            raise NotAPath(f'node {x} is not in the gadget')
    vertices, edges = [gg.nodes[nodes[0]][0]], []
    for a, b in zip(nodes, nodes[1:]):
        hid = gg.edge_between(a, b)
        if hid is None:
            raise NotAPath(f'nodes {a} and {b} are not adjacent in H')
        if gg.kinds[hid] == CROSS:
            edges.append(gg.g_edge_of_h_edge[hid])
            vertices.append(gg.nodes[b][0])
    if nodes[0] not in gg.a_set or nodes[-1] not in gg.a_set:
        raise EndpointsNotInA('both ends of the path must lie in A')
    return Trail(tuple(vertices), tuple(edges))


def trail_to_path(gg: GadgetGraph, t: Trail) -> tuple[int, ...]:
    """Map a trail between terminals, with at least one edge, to its A-path in H."""
    if not t.edges:
        raise EmptyTrail('only trails with at least one edge have an A-path')
    if t.start not in gg.terminals or t.end not in gg.terminals:
        raise EndpointsNotInA(
            f'trail runs {t.start}..{t.end}, not between terminals {sorted(gg.terminals)}')
    path = []
    for i, eid in enumerate(t.edges):
        path.append(gg.node_of_g_edge[(eid, t.vertices[i])])
        path.append(gg.node_of_g_edge[(eid, t.vertices[i + 1])])
    return tuple(path)


def vertex_cover_to_edge_cover(gg: GadgetGraph, cover: Iterable[int]) -> frozenset[int]:
    return frozenset(gg.g_edge_of_node(x) for x in cover)


def to_dot(gg: GadgetGraph) -> str:
    lines = ['graph H {']
    for i, (x, eid) in enumerate(gg.nodes):
        shape = 'doublecircle' if i in gg.a_set else 'circle'
        lines.append(f'  {i} [label="{x}:{eid}", shape={shape}];')
    for e in gg.h.edges:
        style = 'dashed' if gg.kinds[e.id] == CLIQUE else 'solid'
        lines.append(f'  {e.u} -- {e.v} [label="{gg.label(e.id)}", style={style}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
