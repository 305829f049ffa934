"""Trails, their verification and surgery, and path/trail contacts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (BadPosition, EdgeOverlap, EndpointMismatch,
                     InvalidCollection)
from .graph_core import Multigraph, parity

REPEATED_EDGE = 'RepeatedEdge'
BROKEN_CHAIN = 'BrokenChain'
WRONG_ENDPOINTS = 'WrongEndpoints'
WRONG_PARITY = 'WrongParity'

FORWARD = 1
REVERSE = -1


@dataclass(frozen=True)
class Trail:
    """Vertex sequence ``x0..xr`` and edge sequence ``e1..er``; edge i joins
    vertices i and i+1. Well-formedness against a graph is checked by
    :func:`verify_trail`, not on construction."""
    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'edges', tuple(self.edges))
        if len(self.vertices) != len(self.edges) + 1:
            raise BadPosition('a trail needs exactly one more vertex than edges')

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self):
        return len(self.edges)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @classmethod
    def trivial(cls, x: int) -> 'Trail':
        return cls((x,), ())

    @classmethod
    def from_edges(cls, g: Multigraph, start: int, edge_ids: Iterable[int]) -> 'Trail':
        vertices = [start]
        edges = []
        for eid in edge_ids:
            vertices.append(g.edge(eid).other(vertices[-1]))
            edges.append(eid)
        return cls(tuple(vertices), tuple(edges))

    def to_json(self) -> dict:
        return {'vertices': list(self.vertices), 'edges': list(self.edges)}

    @classmethod
    def from_json(cls, doc: dict) -> 'Trail':
        try:
            return cls(tuple(int(x) for x in doc['vertices']),
                       tuple(int(e) for e in doc['edges']))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidCollection(f'malformed trail: {exc}') from exc


@dataclass(frozen=True)
class TrailViolation:
    kind: str
    message: str


def trail_parity(g: Multigraph, t: Trail) -> int:
    return parity(g, t.edges)


def verify_trail(g: Multigraph, t: Trail, endpoints=None, want_odd: bool | None = True):
    """Check ``t`` against ``g``; returns None when it is fine, else a TrailViolation.

    ``endpoints`` is an unordered pair; pass None to skip the endpoint check.
    ``want_odd`` None skips the parity check.
    """
    if len(set(t.edges)) != len(t.edges):
        dup = next(e for e in t.edges if t.edges.count(e) > 1)
        return TrailViolation(REPEATED_EDGE, f'edge {dup} is used twice')
    for i, eid in enumerate(t.edges):
        if not g.has_edge(eid):
            return TrailViolation(BROKEN_CHAIN, f'edge {eid} is not in the graph')
        if not g.edge(eid).joins(t.vertices[i], t.vertices[i + 1]):
            return TrailViolation(
                BROKEN_CHAIN,
                f'edge {eid} does not join {t.vertices[i]} and {t.vertices[i + 1]}')
    if not t.edges and not 0 <= t.start < g.vertex_count:
        return TrailViolation(BROKEN_CHAIN, f'vertex {t.start} is not in the graph')
    if endpoints is not None:
        a, b = endpoints
        if (t.start, t.end) not in ((a, b), (b, a)):
            return TrailViolation(WRONG_ENDPOINTS,
                                  f'trail runs {t.start}..{t.end}, expected {a}..{b}')
    if want_odd is not None and trail_parity(g, t) != int(want_odd):
        return TrailViolation(WRONG_PARITY,
                              f'trail is {"even" if want_odd else "odd"}')
    return None


def check_pairwise_disjoint(trails: Iterable[Trail]):
    """Return the first edge id shared by two trails, or None."""
    seen = set()
    for t in trails:
        for eid in t.edges:
            if eid in seen:
                return eid
        seen.update(t.edges)
    return None


def reverse(t: Trail) -> Trail:
    return Trail(t.vertices[::-1], t.edges[::-1])


def concat(a: Trail, b: Trail) -> Trail:
    if a.end != b.start:
        raise EndpointMismatch(f'cannot join a trail ending at {a.end} to one starting at {b.start}')
    if a.edge_set() & b.edge_set():
        raise EdgeOverlap(f'trails share edges {sorted(a.edge_set() & b.edge_set())}')
    return Trail(a.vertices + b.vertices[1:], a.edges + b.edges)


def subtrail(t: Trail, i: int, j: int) -> Trail:
    """Piece of ``t`` between vertex occurrences ``i`` and ``j`` (inclusive)."""
    if not 0 <= i <= j < len(t.vertices):
        raise BadPosition(f'occurrences {i}..{j} out of range for a trail of length {len(t)}')
    return Trail(t.vertices[i:j + 1], t.edges[i:j])


def split_at(t: Trail, position: int):
    if not 0 <= position < len(t.vertices):
        raise BadPosition(f'occurrence {position} out of range for a trail of length {len(t)}')
    return subtrail(t, 0, position), subtrail(t, position, len(t))


@dataclass(frozen=True)
class Contact:
    """A maximal run shared by a path P and a trail T.

    Ranges are half-open intervals of edge positions; ``t_range`` is always
    increasing, and ``orientation`` says whether T walks the run in P's
    direction.
    """
    p_range: tuple[int, int]
    t_range: tuple[int, int]
    orientation: int

    @property
    def entry(self) -> int:
        """Occurrence index in T of the contact vertex P reaches first."""
        return self.t_range[0] if self.orientation == FORWARD else self.t_range[1]

    @property
    def exit(self) -> int:
        """Occurrence index in T of the contact vertex P leaves last."""
        return self.t_range[1] if self.orientation == FORWARD else self.t_range[0]

    def __len__(self):
        return self.p_range[1] - self.p_range[0]


def contacts(p: Trail, t: Trail) -> list[Contact]:
    position = {eid: j for j, eid in enumerate(t.edges)}
    found = []
    i = 0
    while i < len(p.edges):
        j = position.get(p.edges[i])
        if j is None:
            i += 1
            continue
        step = FORWARD if t.vertices[j] == p.vertices[i] else REVERSE
        i0, j0 = i, j
        while (i + 1 < len(p.edges)
               and position.get(p.edges[i + 1]) == j + step):
            i += 1
            j += step
        i += 1
        lo, hi = (j0, j + 1) if step == FORWARD else (j, j0 + 1)
        found.append(Contact((i0, i), (lo, hi), step))
    return found


class ContactCount(NamedTuple):
    total: int
    matrix: tuple[tuple[int, ...], ...]


def total_contacts(paths: Iterable[Trail], trails: Iterable[Trail]) -> ContactCount:
    trails = list(trails)
    matrix = tuple(tuple(len(contacts(p, t)) for t in trails) for p in paths)
    return ContactCount(sum(map(sum, matrix)), matrix)


UU, VV, UV = 'uu', 'vv', 'uv'


@dataclass(frozen=True)
class TrailCollection:
    """Edge-disjoint odd trails with ends in {u, v}.

    (v, u)-trails are stored reversed so every mixed trail runs from u to v.
    Build through :meth:`build`, which checks the invariants.
    """
    graph: Multigraph
    u: int
    v: int
    trails: tuple[Trail, ...]
    kinds: tuple[str, ...]

    @classmethod
    def build(cls, g: Multigraph, u: int, v: int, trails: Sequence[Trail]) -> 'TrailCollection':
        oriented, kinds = [], []
        for index, t in enumerate(trails):
            problem = verify_trail(g, t, None, want_odd=True)
            if problem is not None:
                raise InvalidCollection(f'trail {index}: {problem.message}')
            if not {t.start, t.end} <= {u, v}:
                raise InvalidCollection(f'trail {index} runs {t.start}..{t.end}, outside {{{u}, {v}}}')
            if t.start == v and t.end == u and u != v:
                t = reverse(t)
            oriented.append(t)
            if t.start != t.end:
                kinds.append(UV)
            else:
                kinds.append(UU if t.start == u else VV)
        shared = check_pairwise_disjoint(oriented)
        if shared is not None:
            raise InvalidCollection(f'edge {shared} is used by two trails')
        return cls(g, u, v, tuple(oriented), tuple(kinds))

    def __len__(self):
        return len(self.trails)

    def __iter__(self):
        return iter(self.trails)

    @property
    def k_uu(self) -> int:
        return self.kinds.count(UU)

    @property
    def k_vv(self) -> int:
        return self.kinds.count(VV)

    @property
    def k_uv(self) -> int:
        return self.kinds.count(UV)

    def replaced(self, index: int, trail: Trail) -> 'TrailCollection':
        trails = list(self.trails)
        trails[index] = trail
        return TrailCollection.build(self.graph, self.u, self.v, trails)
