"""Top-level solvers: odd (s,s)-trails, odd (u,v)-trails and odd (C,D)-trails.

Each returns either k edge-disjoint odd trails or a small cover, checked
against the exact oracle whenever the instance fits its budget.
"""
from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Callable

from .apath_oracle import solve_apaths
from .config import Budgets
from .errors import (BadParameter, CertificateRejected, OverlappingTerminalSets,
                     WitnessInvalid)
from .flow import edge_connectivity, min_cut
from .gadget import build_gadget, path_to_trail, vertex_cover_to_edge_cover
from .graph_core import (Multigraph, degree, edge_ids_between, identify_vertices,
                         parity, without_edges)
from .oracle import is_cover, pack_exact, tau_exact
from .trails import (Trail, TrailCollection, check_pairwise_disjoint, concat,
                     reverse, subtrail, verify_trail)
from .untangle import IterationRecord, untangle

LOGGER = logging.getLogger(__name__)

PACKING = 'packing'
COVER = 'cover'

EMPTY = 'empty'
MIN_CUT = 'min-cut'
SSTRAILS_PACKING = 'sstrails-packing'
SSTRAILS_COVER = 'sstrails-cover'
UNTANGLED_PACKING = 'untangled-packing'
DIRECT_PARALLEL_EDGES = 'direct-parallel-edges'
EXACT_PACKING = 'exact-packing'
EXACT_COVER = 'exact-cover'


@dataclass(frozen=True)
class SolveOutcome:
    kind: str
    k: int
    provenance: str
    trails: tuple[Trail, ...] = ()
    cover: frozenset[int] = frozenset()
    verified: bool = False
    ends: tuple[tuple[int, int], ...] = ()

    @property
    def is_packing(self) -> bool:
        return self.kind == PACKING

    def to_json(self) -> dict:
        doc = {'kind': self.kind, 'k': self.k, 'provenance': self.provenance}
        if self.is_packing:
            doc['trails'] = [t.to_json() for t in self.trails]
            if self.ends:
                doc['ends'] = [list(pair) for pair in self.ends]
        else:
            doc['cover'] = sorted(self.cover)
            doc['verified'] = self.verified
        return doc


def _check_k(k: int):
    if not isinstance(k, int) or k < 0:
        raise BadParameter(f'k must be a non-negative integer, got {k!r}')


def _members(x) -> frozenset[int]:
    return frozenset((x,) if isinstance(x, int) else x)


def _name(x) -> str:
    members = sorted(_members(x))
    return str(members[0]) if len(members) == 1 else '{' + ','.join(map(str, members)) + '}'


def _oracle_check(g: Multigraph, u, v, cover, budgets: Budgets) -> bool:
    if g.edge_count > budgets.oracle:
        LOGGER.info('cover of %d edges left unverified: %d edges exceed the oracle budget %d',
                    len(cover), g.edge_count, budgets.oracle)
        return False
    if not is_cover(g, u, v, cover, budgets.oracle):
        raise CertificateRejected(
            f'edges {sorted(cover)} miss an odd ({_name(u)},{_name(v)})-trail')
    return True


def verify_outcome(g: Multigraph, u, v, outcome: SolveOutcome,
                   budgets: Budgets = Budgets()) -> bool:
    """Re-check an outcome against ``g``; returns whether the oracle confirmed a cover.

    ``u`` and ``v`` may be terminal sets, in which case every trail must run
    from one set to the other.
    """
    starts, ends = _members(u), _members(v)
    if outcome.is_packing:
        if len(outcome.trails) != outcome.k:
            raise CertificateRejected(f'{len(outcome.trails)} trails for k={outcome.k}')
        for t in outcome.trails:
            problem = verify_trail(g, t, None, want_odd=True)
            if problem is not None:
                raise CertificateRejected(f'{problem.kind}: {problem.message}')
            if not ((t.start in starts and t.end in ends) or (t.start in ends and t.end in starts)):
                raise CertificateRejected(
                    f'trail runs {t.start}..{t.end}, expected {_name(u)}..{_name(v)}')
        shared = check_pairwise_disjoint(outcome.trails)
        if shared is not None:
            raise CertificateRejected(f'edge {shared} is used by two trails')
        return False
    limit = 2 * outcome.k - (2 if starts == ends else 1)
    if len(outcome.cover) > limit:
        raise CertificateRejected(f'cover of {len(outcome.cover)} edges exceeds {limit}')
    return _oracle_check(g, u, v, outcome.cover, budgets)


def solve_ss(g: Multigraph, s: int, k: int, budgets: Budgets = Budgets()) -> SolveOutcome:
    """k edge-disjoint odd (s,s)-trails or a cover of at most 2k - 2 edges."""
    _check_k(k)
    g.check_vertex(s)
    if k == 0:
        return SolveOutcome(PACKING, 0, EMPTY)
    gg = build_gadget(g, s)
    found = solve_apaths(gg, k, budgets.apath)
    if found.is_packing:
        trails = tuple(path_to_trail(gg, p) for p in found.packing)
        outcome = SolveOutcome(PACKING, k, SSTRAILS_PACKING, trails=trails)
    else:
        cover = vertex_cover_to_edge_cover(gg, found.cover)
        outcome = SolveOutcome(COVER, k, SSTRAILS_COVER, cover=cover)
    verified = verify_outcome(g, s, s, outcome, budgets)
    LOGGER.info('(s,s) with s=%d, k=%d: %s', s, k, outcome.kind)
    return SolveOutcome(outcome.kind, k, outcome.provenance, outcome.trails,
                        outcome.cover, verified)


def _lift(g: Multigraph, t: Trail, u: int, v: int) -> Trail:
    """Re-expand an (s,s)-trail of the identified graph into G.

    The trail breaks wherever consecutive edges meet at different terminals;
    the first odd piece is returned.
    """
    first = g.edge(t.edges[0])
    start = first.u if first.u in (u, v) else first.v
    pieces, vertices, edges = [], [start], []
    for eid in t.edges:
        e = g.edge(eid)
        here = vertices[-1]
        if here not in (e.u, e.v):
            pieces.append(Trail(tuple(vertices), tuple(edges)))
            here = e.u if e.u in (u, v) else e.v
            vertices, edges = [here], []
        vertices.append(e.other(here))
        edges.append(eid)
    pieces.append(Trail(tuple(vertices), tuple(edges)))
    for piece in pieces:
        if parity(g, piece.edges):
            return piece
    raise WitnessInvalid('lifted trail has no odd piece')


def solve_uv(g: Multigraph, u: int, v: int, k: int, budgets: Budgets = Budgets(),
             trace: Callable[[IterationRecord], None] | None = None) -> SolveOutcome:
    """k edge-disjoint odd (u,v)-trails or a cover of at most 2k - 1 edges."""
    _check_k(k)
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return solve_ss(g, u, k, budgets)
    if k == 0:
        return SolveOutcome(PACKING, 0, EMPTY)

    lam = edge_connectivity(g, u, v)
    if lam < 2 * k:
        cut = min_cut(g, u, v)
        LOGGER.info('lambda(%d, %d) = %d < %d: returning a minimum cut', u, v, lam, 2 * k)
        outcome = SolveOutcome(COVER, k, MIN_CUT, cover=cut)
        return SolveOutcome(COVER, k, MIN_CUT, cover=cut,
                            verified=verify_outcome(g, u, v, outcome, budgets))

    parallel = edge_ids_between(g, u, v)
    odd_direct = tuple(eid for eid in parallel if g.is_signed(eid))
    remaining = k - len(odd_direct)
    if remaining <= 0:
        trails = tuple(Trail((u, v), (eid,)) for eid in odd_direct[:k])
        LOGGER.info('%d signed u-v edges already give k=%d trails', len(odd_direct), k)
        return SolveOutcome(PACKING, k, DIRECT_PARALLEL_EDGES, trails=trails)

    merged, vertex_map, _ = identify_vertices(without_edges(g, parallel), u, v)
    s = vertex_map[u]
    LOGGER.debug('identified %d and %d into s=%d; %d trails still needed', u, v, s, remaining)
    inner = solve_ss(merged, s, remaining, budgets)
    if not inner.is_packing:
        cover = inner.cover | frozenset(odd_direct)
        outcome = SolveOutcome(COVER, k, SSTRAILS_COVER, cover=cover)
        return SolveOutcome(COVER, k, SSTRAILS_COVER, cover=cover,
                            verified=verify_outcome(g, u, v, outcome, budgets))

    lifted = [_lift(g, t, u, v) for t in inner.trails]
    lifted += [Trail((u, v), (eid,)) for eid in odd_direct]
    collection = TrailCollection.build(g, u, v, lifted)
    LOGGER.info('lifted %d trails (uu=%d, vv=%d, uv=%d); untangling',
                len(collection), collection.k_uu, collection.k_vv, collection.k_uv)
    trails = tuple(untangle(g, u, v, collection, trace))
    outcome = SolveOutcome(PACKING, k, UNTANGLED_PACKING, trails=trails)
    verify_outcome(g, u, v, outcome, budgets)
    return outcome


def _with_hubs(g: Multigraph, c: frozenset[int], d: frozenset[int]):
    """G plus a hub joined to every vertex of C and one joined to every vertex of D.

    Each terminal x gets ``degree(x) + 1`` unsigned hub edges, so no minimum
    hub-to-hub cut uses them and lambda(hub_c, hub_d) equals lambda(C, D) in G.
    Returns ``(graph, hub_c, hub_d, hub edge ids per terminal)``.
    """
    hub_c, hub_d = g.vertex_count, g.vertex_count + 1
    next_id = max(g.edge_ids, default=-1) + 1
    edges, pools = list(g.edges), {}
    for x in sorted(c | d):
        hub = hub_c if x in c else hub_d
        pools[x] = tuple(range(next_id, next_id + degree(g, x) + 1))
        edges.extend((eid, x, hub) for eid in pools[x])
        next_id += len(pools[x])
    return Multigraph(g.vertex_count + 2, edges, g.sigma), hub_c, hub_d, pools


def _attach(t: Trail, hubs: dict, pools: dict, taken: dict) -> Trail:
    """Extend a trail between terminals by one fresh hub edge at each end."""
    a, b = t.start, t.end
    head = pools[a][taken.get(a, 0)]
    taken[a] = taken.get(a, 0) + 1
    tail = pools[b][taken.get(b, 0)]
    taken[b] = taken.get(b, 0) + 1
    return Trail((hubs[a],) + t.vertices + (hubs[b],), (head,) + t.edges + (tail,))


def _g_pieces(t: Trail, hub_vertices) -> list[Trail]:
    """Split a hub-to-hub trail into its runs of G edges.

    A run that ends at x followed by a hop out to a hub and straight back to x
    continues as the same trail of G.
    """
    pieces, start = [], None
    for i, x in enumerate(t.vertices):
        if x in hub_vertices:
            if start is not None:
                pieces.append(subtrail(t, start, i - 1))
                start = None
        elif start is None:
            start = i
    merged = []
    for piece in pieces:
        if merged and merged[-1].end == piece.start:
            merged[-1] = concat(merged[-1], piece)
        else:
            merged.append(piece)
    return merged


def _restore(g: Multigraph, t: Trail, hub_c: int, hub_d: int, c, d) -> Trail | None:
    """An odd (C,D)-trail of G inside a hub-to-hub trail, oriented from C, or None."""
    for piece in _g_pieces(t, (hub_c, hub_d)):
        if not parity(g, piece.edges):
            continue
        if piece.start in c and piece.end in d:
            return piece
        if piece.start in d and piece.end in c:
            return reverse(piece)
    return None


def _exact_cd(g: Multigraph, c, d, k: int, budgets: Budgets) -> SolveOutcome:
    packing = pack_exact(g, c, d, budgets.oracle)
    if len(packing) >= k:
        trails = packing[:k]
        outcome = SolveOutcome(PACKING, k, EXACT_PACKING, trails=trails,
                               ends=tuple((t.start, t.end) for t in trails))
        verify_outcome(g, c, d, outcome, budgets)
        return outcome
    size, cover = tau_exact(g, c, d, budgets.oracle)
    if size > 2 * k - 1:
        raise WitnessInvalid(
            f'only {len(packing)} edge-disjoint odd (C,D)-trails and no cover below {size} edges, '
            f'k={k}')
    outcome = SolveOutcome(COVER, k, EXACT_COVER, cover=cover)
    return SolveOutcome(COVER, k, EXACT_COVER, cover=cover,
                        verified=verify_outcome(g, c, d, outcome, budgets))


def solve_cd(g: Multigraph, c, d, k: int, budgets: Budgets = Budgets(),
             trace: Callable[[IterationRecord], None] | None = None) -> SolveOutcome:
    """k edge-disjoint odd (C,D)-trails of G or a cover of at most 2k - 1 edges.

    The gadget takes every terminal of C and D into A; its trails are
    untangled between two hubs standing in for C and D and cut back to G.
    When a trail has no odd (C,D) piece in G the exact search decides.
    ``ends`` gives each trail's end in C and end in D.
    """
    _check_k(k)
    c, d = frozenset(c), frozenset(d)
    if not c or not d:
        raise BadParameter('terminal sets must be non-empty')
    for x in c | d:
        g.check_vertex(x)
    if c & d:
        raise OverlappingTerminalSets(f'vertices {sorted(c & d)} are in both terminal sets')
    if len(c) == 1 and len(d) == 1:
        outcome = solve_uv(g, min(c), min(d), k, budgets, trace)
        if not outcome.is_packing:
            return outcome
        return SolveOutcome(PACKING, k, outcome.provenance, outcome.trails,
                            ends=tuple((t.start, t.end) for t in outcome.trails))
    if k == 0:
        return SolveOutcome(PACKING, 0, EMPTY)

    star, hub_c, hub_d, pools = _with_hubs(g, c, d)
    lam = edge_connectivity(star, hub_c, hub_d)
    if lam < 2 * k:
        cut = min_cut(star, hub_c, hub_d)
        LOGGER.info('lambda(C, D) = %d < %d: returning a minimum cut', lam, 2 * k)
        outcome = SolveOutcome(COVER, k, MIN_CUT, cover=cut)
        return SolveOutcome(COVER, k, MIN_CUT, cover=cut,
                            verified=verify_outcome(g, c, d, outcome, budgets))

    gg = build_gadget(g, c | d)
    found = solve_apaths(gg, k, budgets.apath)
    if not found.is_packing:
        cover = vertex_cover_to_edge_cover(gg, found.cover)
        outcome = SolveOutcome(COVER, k, SSTRAILS_COVER, cover=cover)
        return SolveOutcome(COVER, k, SSTRAILS_COVER, cover=cover,
                            verified=verify_outcome(g, c, d, outcome, budgets))

    hubs = {x: hub_c if x in c else hub_d for x in c | d}
    taken = {}
    lifted = [_attach(path_to_trail(gg, p), hubs, pools, taken) for p in found.packing]
    collection = TrailCollection.build(star, hub_c, hub_d, lifted)
    LOGGER.info('%d terminal trails (CC=%d, DD=%d, CD=%d); untangling between hubs',
                len(collection), collection.k_uu, collection.k_vv, collection.k_uv)
    untangled = untangle(star, hub_c, hub_d, collection, trace)
    restored = [_restore(g, t, hub_c, hub_d, c, d) for t in untangled]
    missing = sum(t is None for t in restored)
    if missing:
        LOGGER.warning('%d of %d untangled trails have no odd (C,D) piece in G; '
                       'falling back to the exact search', missing, k)
        return _exact_cd(g, c, d, k, budgets)
    trails = tuple(restored)
    outcome = SolveOutcome(PACKING, k, UNTANGLED_PACKING, trails=trails,
                           ends=tuple((t.start, t.end) for t in trails))
    verify_outcome(g, c, d, outcome, budgets)
    return outcome
