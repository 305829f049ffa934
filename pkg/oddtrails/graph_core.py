"""Loop-free undirected multigraphs with stable edge ids and a signed-edge set."""
from __future__ import annotations

from dataclasses import dataclass
import json
import logging
from typing import Iterable

import networkx as nx

from .errors import GraphFormatError, LoopWouldForm, SameVertex, BadParameter

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f'vertex {x} is not an end of edge {self.id}')

    def joins(self, a: int, b: int) -> bool:
        return (self.u, self.v) in ((a, b), (b, a))


class Multigraph:
    """Immutable multigraph. Edge ids are kept as given and may be sparse.

    ``sigma`` is the set of signed edges; a set F of edges is odd when
    ``|F & sigma|`` is odd. It defaults to every edge.
    """

    __slots__ = ('vertex_count', 'edges', 'sigma', '_by_id', '_adjacency')

    def __init__(self, vertex_count: int, edges: Iterable, sigma: Iterable[int] | None = None):
        if vertex_count < 0:
            raise GraphFormatError('vertex count must be non-negative')
        built = []
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*map(int, item))
            if e.u == e.v:
                raise LoopWouldForm(f'edge {e.id} is a loop at vertex {e.u}')
            for x in (e.u, e.v):
                if not 0 <= x < vertex_count:
                    raise GraphFormatError(f'edge {e.id} has out-of-range vertex {x}')
            built.append(e)
        built.sort(key=lambda e: e.id)
        by_id = {}
        for e in built:
            if e.id < 0 or e.id in by_id:
                raise GraphFormatError(f'duplicate or negative edge id {e.id}')
            by_id[e.id] = e
        if sigma is None:
            sigma = frozenset(by_id)
        else:
            sigma = frozenset(sigma)
            stray = sigma - by_id.keys()
            if stray:
                raise GraphFormatError(f'signed ids {sorted(stray)} are not edges')
        adjacency = [[] for _ in range(vertex_count)]
        for e in built:
            adjacency[e.u].append((e.id, e.v))
            adjacency[e.v].append((e.id, e.u))
        self.vertex_count = vertex_count
        self.edges = tuple(built)
        self.sigma = sigma
        self._by_id = by_id
        self._adjacency = tuple(tuple(a) for a in adjacency)

    def __repr__(self):
        return f'Multigraph(vertices={self.vertex_count}, edges={len(self.edges)}, signed={len(self.sigma)})'

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (self.vertex_count, self.edges, self.sigma) == (other.vertex_count, other.edges, other.sigma)

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.sigma))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphFormatError(f'no edge with id {eid}') from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def adjacency(self, x: int) -> tuple[tuple[int, int], ...]:
        """(edge id, neighbour) pairs at ``x`` in increasing edge id order."""
        return self._adjacency[x]

    def is_signed(self, eid: int) -> bool:
        return eid in self.sigma

    def check_vertex(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.vertex_count:
            raise BadParameter(f'vertex {x} is not in a graph with {self.vertex_count} vertices')
        return x

    def to_json(self, terminals: dict | None = None) -> dict:
        doc = {
            'vertices': self.vertex_count,
            'edges': [{'id': e.id, 'u': e.u, 'v': e.v, 'signed': e.id in self.sigma}
                      for e in self.edges],
        }
        if terminals:
            doc['terminals'] = dict(terminals)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> 'Multigraph':
        try:
            n = int(doc['vertices'])
            triples = []
            sigma = []
            for item in doc['edges']:
                eid = int(item['id'])
                triples.append((eid, int(item['u']), int(item['v'])))
                if item.get('signed', True):
                    sigma.append(eid)
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f'malformed graph document: {exc}') from exc
        return cls(n, triples, sigma)


def read_graph_document(text: str) -> tuple[Multigraph, dict]:
    """Parse the JSON graph schema; returns the graph and its (possibly empty) terminals."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f'input is not JSON: {exc}') from exc
    if not isinstance(doc, dict):
        raise GraphFormatError('graph document must be a JSON object')
    g = Multigraph.from_json(doc)
    terminals = doc.get('terminals') or {}
    if not isinstance(terminals, dict):
        raise GraphFormatError('terminals must be an object')
    for name, x in terminals.items():
        if isinstance(x, list):
            for y in x:
                g.check_vertex(y)
        else:
            g.check_vertex(x)
    return g, terminals


def degree(g: Multigraph, x: int) -> int:
    return len(g.adjacency(x))


def parity(g: Multigraph, edge_ids: Iterable[int]) -> int:
    return len(set(edge_ids) & g.sigma) % 2


def edge_ids_between(g: Multigraph, a: int, b: int) -> tuple[int, ...]:
    return tuple(eid for eid, y in g.adjacency(a) if y == b)


def without_edges(g: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    drop = frozenset(edge_ids)
    return Multigraph(g.vertex_count,
                      [e for e in g.edges if e.id not in drop],
                      g.sigma - drop)


def delta(g: Multigraph, vertices: Iterable[int]) -> frozenset[int]:
    inside = set(vertices)
    return frozenset(e.id for e in g.edges if (e.u in inside) != (e.v in inside))


def to_nx(g: Multigraph) -> nx.MultiGraph:
    """networkx view with ``key`` = edge id and a ``signed`` attribute."""
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    for e in g.edges:
        h.add_edge(e.u, e.v, key=e.id, signed=e.id in g.sigma)
    return h


def components(g: Multigraph, removed_vertices: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g`` minus the removed vertices, ordered by least vertex."""
    h = to_nx(g)
    h.remove_nodes_from(set(removed_vertices))
    return sorted((frozenset(c) for c in nx.connected_components(h)), key=min)


def boundary_and_induced(g: Multigraph, vertices: Iterable[int]):
    """Return ``(E(S), {C: E(S, C)})`` for every component C of G - S."""
    s = frozenset(vertices)
    induced = frozenset(e.id for e in g.edges if e.u in s and e.v in s)
    comps = components(g, s)
    owner = {x: c for c in comps for x in c}
    between = {c: set() for c in comps}
    for e in g.edges:
        if (e.u in s) == (e.v in s):
            continue
        outside = e.v if e.u in s else e.u
        between[owner[outside]].add(e.id)
    return induced, {c: frozenset(ids) for c, ids in between.items()}


def contract(g: Multigraph, groups):
    """Merge each vertex group into one supernode.

    Edges with both ends inside one group are deleted first. The supernode of a
    group takes the place of its least vertex; the other members disappear and
    the remaining vertices are renumbered densely in their original order.
    Returns ``(graph, vertex_map, deleted_edge_ids)``; surviving edges keep
    their ids.
    """
    groups = [frozenset(grp) for grp in groups]
    seen = set()
    for grp in groups:
        if not grp:
            raise BadParameter('cannot contract an empty vertex group')
        for x in grp:
            g.check_vertex(x)
        if seen & grp:
            raise BadParameter('contraction groups overlap')
        seen |= grp
    representative = {}
    for grp in groups:
        head = min(grp)
        for x in grp:
            representative[x] = head
    kept = [x for x in range(g.vertex_count) if representative.get(x, x) == x]
    position = {x: i for i, x in enumerate(kept)}
    vertex_map = [position[representative.get(x, x)] for x in range(g.vertex_count)]
    survivors, deleted = [], set()
    for e in g.edges:
        a, b = vertex_map[e.u], vertex_map[e.v]
        if a == b:
            deleted.add(e.id)
        else:
            survivors.append(Edge(e.id, a, b))
    contracted = Multigraph(len(kept), survivors, g.sigma - deleted)
    LOGGER.debug('contracted %d groups: %d -> %d vertices, %d edges deleted',
                 len(groups), g.vertex_count, contracted.vertex_count, len(deleted))
    return contracted, vertex_map, frozenset(deleted)


def identify_vertices(g: Multigraph, u: int, v: int):
    """Merge ``u`` and ``v`` into one vertex s (at index ``min(u, v)``).

    Returns ``(graph, vertex_map, edge_map)``; the edge map is the identity.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SameVertex(f'cannot identify vertex {u} with itself')
    if edge_ids_between(g, u, v):
        raise LoopWouldForm(f'edges between {u} and {v} would become loops')
    merged, vertex_map, _ = contract(g, [{u, v}])
    return merged, vertex_map, {e.id: e.id for e in merged.edges}


def to_dot(g: Multigraph, names: dict | None = None, title: str = 'G') -> str:
    """DOT text for inspection: signed edges solid, unsigned edges dashed."""
    names = names or {}
    lines = [f'graph {title} {{']
    for x in range(g.vertex_count):
        lines.append(f'  {x} [label="{names.get(x, x)}"];')
    for e in g.edges:
        style = 'solid' if e.id in g.sigma else 'dashed'
        lines.append(f'  {e.u} -- {e.v} [label="{e.id}", style={style}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
