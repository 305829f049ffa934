"""Edge connectivity, minimum cuts and edge-disjoint path families."""
from __future__ import annotations

from dataclasses import dataclass
import logging

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .errors import InsufficientConnectivity, SameVertex
from .graph_core import Multigraph, edge_ids_between, to_nx, without_edges
from .trails import Trail

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathFamily:
    u: int
    v: int
    paths: tuple[Trail, ...]

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, index):
        return self.paths[index]


def _check_terminals(g: Multigraph, u: int, v: int):
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SameVertex(f'flow between {u} and itself is undefined')


def _flow_network(g: Multigraph) -> nx.DiGraph:
    # one arc per direction, capacity = size of the parallel class
    net = nx.DiGraph()
    net.add_nodes_from(range(g.vertex_count))
    for e in g.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if net.has_edge(a, b):
                net[a][b]['capacity'] += 1
            else:
                net.add_edge(a, b, capacity=1)
    return net


def edge_connectivity(g: Multigraph, u: int, v: int) -> int:
    """lambda(u, v): the maximum number of edge-disjoint (u, v)-paths."""
    _check_terminals(g, u, v)
    return int(nx.maximum_flow_value(_flow_network(g), u, v, flow_func=edmonds_karp))


def min_cut(g: Multigraph, u: int, v: int) -> frozenset[int]:
    _check_terminals(g, u, v)
    _, (source_side, _) = nx.minimum_cut(_flow_network(g), u, v, flow_func=edmonds_karp)
    cut = frozenset(e.id for e in g.edges if (e.u in source_side) != (e.v in source_side))
    LOGGER.debug('min cut between %d and %d: %s', u, v, sorted(cut))
    return cut


def reachable(g: Multigraph, u: int, removed=()) -> frozenset[int]:
    """Vertices joined to ``u`` by a path avoiding the removed edge ids."""
    g.check_vertex(u)
    return frozenset(nx.node_connected_component(to_nx(without_edges(g, removed)), u))


def disjoint_paths(g: Multigraph, u: int, v: int, count: int) -> PathFamily:
    """``count`` edge-disjoint simple (u, v)-paths from a maximum flow.

    Opposite flows on a parallel class cancel, the remaining units take the
    lowest edge ids of the class, and cycles met while walking the flow are
    dropped.
    """
    _check_terminals(g, u, v)
    if count <= 0:
        return PathFamily(u, v, ())
    value, flow = nx.maximum_flow(_flow_network(g), u, v, flow_func=edmonds_karp)
    if count > value:
        raise InsufficientConnectivity(
            f'asked for {count} edge-disjoint paths but lambda({u}, {v}) = {value}')

    out_arcs = {x: [] for x in range(g.vertex_count)}
    for a in range(g.vertex_count):
        for b, units in flow[a].items():
            net = units - flow[b].get(a, 0)
            if net > 0:
                for eid in edge_ids_between(g, a, b)[:net]:
                    out_arcs[a].append((eid, b))
    for arcs in out_arcs.values():
        arcs.sort()

    paths = []
    for _ in range(count):
        vertices, edges = [u], []
        where = {u: 0}
        x = u
        while x != v:
            eid, y = out_arcs[x].pop(0)
            if y in where:
                # a flow cycle; drop it and continue from y
                cut = where[y]
                for z in vertices[cut + 1:]:
                    del where[z]
                del vertices[cut + 1:]
                del edges[cut:]
            else:
                where[y] = len(vertices)
                vertices.append(y)
                edges.append(eid)
            x = y
        paths.append(Trail(tuple(vertices), tuple(edges)))
    LOGGER.debug('decomposed flow of value %d into %d paths', value, len(paths))
    return PathFamily(u, v, tuple(paths))
