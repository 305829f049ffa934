"""Brute-force ground truth for odd trails, written apart from the solver.

Searches only walk *reduced* trails: no proper prefix is already an odd
trail ending at v, and no vertex is visited twice with the same prefix
parity (the closed piece between such visits is even and can be cut out).
Every inclusion-minimal odd (u,v)-trail is reduced, so existence, packing
and covering numbers are unchanged by the restriction.

Either end may also be a set of vertices; an odd (C,D)-trail starts anywhere
in C and ends anywhere in D.
"""
from __future__ import annotations

from itertools import product
import logging
from typing import Iterable, NamedTuple, Union

from .config import DEFAULT_MINMAX_BUDGET, DEFAULT_ORACLE_BUDGET
from .errors import BadParameter, BudgetExceeded
from .graph_core import Multigraph
from .trails import Trail

LOGGER = logging.getLogger(__name__)

Terminals = Union[int, Iterable[int]]


def _check_budget(g: Multigraph, budget: int):
    if g.edge_count > budget:
        raise BudgetExceeded('exact odd-trail search', budget, g.edge_count)


def _terminal_set(g: Multigraph, x: Terminals) -> tuple[int, ...]:
    members = (x,) if isinstance(x, int) else tuple(sorted(set(x)))
    if not members:
        raise BadParameter('a terminal set must not be empty')
    for y in members:
        g.check_vertex(y)
    return members


def _label(members: tuple[int, ...]) -> str:
    return str(members[0]) if len(members) == 1 else '{' + ','.join(map(str, members)) + '}'


class _Trails:
    """Edge positions as bits; ``bit[i]`` belongs to ``g.edges[i]``."""

    def __init__(self, g: Multigraph, u: Terminals, v: Terminals):
        self.g = g
        self.starts = _terminal_set(g, u)
        self.ends = frozenset(_terminal_set(g, v))
        self.name = f'({_label(self.starts)}, {_label(tuple(sorted(self.ends)))})'
        position = {e.id: i for i, e in enumerate(g.edges)}
        self.position = position
        self.signed = tuple(int(e.id in g.sigma) for e in g.edges)
        self.arcs = tuple(tuple((position[eid], y) for eid, y in g.adjacency(x))
                          for x in range(g.vertex_count))

    def mask_of(self, edge_ids: Iterable[int]) -> int:
        return sum(1 << self.position[eid] for eid in set(edge_ids) if eid in self.position)

    def walk(self, allowed: int, max_len: int | None = None):
        """Yield ``(vertices, edge positions)`` of every reduced odd trail."""
        for start in self.starts:
            yield from self._walk_from(start, allowed, max_len)

    def _walk_from(self, start: int, allowed: int, max_len: int | None):
        ends = self.ends
        vertices, edges = [start], []
        seen = {start: {0}}

        def step(x, used, par):
            if max_len is not None and len(edges) >= max_len:
                return
            for i, y in self.arcs[x]:
                if not allowed >> i & 1 or used >> i & 1:
                    continue
                p = par ^ self.signed[i]
                if p in seen.get(y, ()):
                    continue
                vertices.append(y)
                edges.append(i)
                if y in ends and p == 1:
                    yield tuple(vertices), tuple(edges)
                else:
                    seen.setdefault(y, set()).add(p)
                    yield from step(y, used | 1 << i, p)
                    seen[y].discard(p)
                vertices.pop()
                edges.pop()

        yield from step(start, 0, 0)

    def first(self, allowed: int, max_len: int | None = None):
        return next(self.walk(allowed, max_len), None)

    def shortest(self, allowed: int):
        if self.first(allowed) is None:
            return None
        length = 1
        while True:
            found = self.first(allowed, length)
            if found is not None:
                return found
            length += 1

    def to_trail(self, found) -> Trail:
        vertices, edges = found
        return Trail(vertices, tuple(self.g.edges[i].id for i in edges))

    @property
    def full(self) -> int:
        return (1 << self.g.edge_count) - 1


def find_odd_trail(g: Multigraph, u: Terminals, v: Terminals, blocked: Iterable[int] = (),
                   budget: int = DEFAULT_ORACLE_BUDGET):
    """A shortest odd (u,v)-trail avoiding ``blocked``, or None."""
    _check_budget(g, budget)
    search = _Trails(g, u, v)
    found = search.shortest(search.full & ~search.mask_of(blocked))
    return None if found is None else search.to_trail(found)


def odd_trail_exists(g: Multigraph, u: Terminals, v: Terminals,
                     budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    _check_budget(g, budget)
    search = _Trails(g, u, v)
    return search.first(search.full) is not None


def is_cover(g: Multigraph, u: Terminals, v: Terminals, cover: Iterable[int],
             budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    _check_budget(g, budget)
    search = _Trails(g, u, v)
    return search.first(search.full & ~search.mask_of(cover)) is None


def _max_packing(search: _Trails) -> tuple:
    """Branches on the lowest remaining edge at a start vertex: either no
    chosen trail uses it, or one of the odd trails through it is taken."""
    found = {}
    for walk in search.walk(search.full):
        found.setdefault(sum(1 << i for i in walk[1]), walk)
    # a trail whose edge set contains another odd trail's is never needed
    minimal = []
    for m in sorted(found, key=lambda m: (bin(m).count('1'), m)):
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    at_start = sorted({i for x in search.starts for i, _ in search.arcs[x]})
    through = {i: [m for m in minimal if m >> i & 1] for i in at_start}
    memo = {}

    def best(mask):
        if mask in memo:
            return memo[mask]
        first = next((i for i in at_start if mask >> i & 1), None)
        result = ()
        if first is not None:
            result = best(mask & ~(1 << first))
            for m in through[first]:
                if m & mask == m:
                    rest = best(mask & ~m)
                    if 1 + len(rest) > len(result):
                        result = (found[m],) + rest
        memo[mask] = result
        return result

    packing = best(search.full)
    LOGGER.debug('nu%s: %d minimal odd trails, %d states, value %d',
                 search.name, len(minimal), len(memo), len(packing))
    return packing


def nu_exact(g: Multigraph, u: Terminals, v: Terminals, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """Maximum number of edge-disjoint odd (u,v)-trails."""
    _check_budget(g, budget)
    return len(_max_packing(_Trails(g, u, v)))


def pack_exact(g: Multigraph, u: Terminals, v: Terminals,
               budget: int = DEFAULT_ORACLE_BUDGET) -> tuple[Trail, ...]:
    """A maximum family of edge-disjoint odd (u,v)-trails."""
    _check_budget(g, budget)
    search = _Trails(g, u, v)
    return tuple(search.to_trail(found) for found in _max_packing(search))


def tau_exact(g: Multigraph, u: Terminals, v: Terminals, budget: int = DEFAULT_ORACLE_BUDGET):
    """Minimum odd (u,v)-trail cover as ``(size, edge ids)``.

    Iterative deepening on the cover size; each level branches on the edges
    of a shortest surviving odd trail.
    """
    _check_budget(g, budget)
    search = _Trails(g, u, v)
    failed = set()

    def hit(removed, room):
        found = search.shortest(search.full & ~removed)
        if found is None:
            return removed
        if room == 0 or (removed, room) in failed:
            return None
        for i in sorted(set(found[1])):
            result = hit(removed | 1 << i, room - 1)
            if result is not None:
                return result
        failed.add((removed, room))
        return None

    size = 0
    while True:
        removed = hit(0, size)
        if removed is not None:
            cover = frozenset(g.edges[i].id for i in range(g.edge_count) if removed >> i & 1)
            LOGGER.debug('tau%s = %d', search.name, size)
            return size, cover
        size += 1


def _cut_by(g: Multigraph, e, side) -> bool:
    a, b = side[e.u], side[e.v]
    if (a == 0) != (b == 0):
        return True
    return a != 0 and (a != b) != (e.id in g.sigma)


class RestrictedCover(NamedTuple):
    size: int
    cover: frozenset
    x: frozenset
    sides: tuple


def restricted_cover_minimum(g: Multigraph, u: int, v: int,
                             budget: int = DEFAULT_MINMAX_BUDGET) -> RestrictedCover:
    """Smallest cover of the form delta(X) + (E(X) - F), {u, v} in X, (X, F)
    balanced with u and v on the same side. Side 0 means outside X."""
    g.check_vertex(u)
    g.check_vertex(v)
    if g.vertex_count > budget:
        raise BudgetExceeded('restricted cover enumeration', budget, g.vertex_count)
    others = [x for x in range(g.vertex_count) if x not in (u, v)]
    side = [0] * g.vertex_count
    side[u] = side[v] = 1
    best = None
    for digits in product((0, 1, 2), repeat=len(others)):
        for x, d in zip(others, digits):
            side[x] = d
        size = sum(1 for e in g.edges if _cut_by(g, e, side))
        if best is None or size < best[0]:
            best = (size, tuple(side))
    size, chosen = best
    cover = frozenset(e.id for e in g.edges if _cut_by(g, e, chosen))
    x = frozenset(i for i, d in enumerate(chosen) if d)
    return RestrictedCover(size, cover, x, chosen)
