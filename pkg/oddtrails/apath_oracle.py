"""Exact nonzero [s]-path packing and covering in the gadget graph, and the
value of valid triples.

Only paths without internal [s]-nodes and without two consecutive clique
edges are searched. Clique edges form vertex-disjoint cliques, so any other
nonzero [s]-path shortcuts to one of these on a subset of its nodes with the
same label sum; the restriction changes neither the packing number nor the
set of covers. Such a path alternates cross edge, clique hop, cross edge, and
is really an (s,s)-trail of G that visits s only at its ends.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import logging
import random
from typing import Iterable, Iterator

import networkx as nx

from .config import DEFAULT_APATH_BUDGET
from .errors import BadParameter, BudgetExceeded, CertificateRejected, InvalidTriple
from .gadget import GadgetGraph

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class APathOutcome:
    requested_k: int
    packing: tuple[tuple[int, ...], ...] | None = None
    cover: frozenset[int] | None = None

    @property
    def is_packing(self) -> bool:
        return self.packing is not None


@dataclass(frozen=True)
class ValidTriple:
    y: frozenset[int] = field(default_factory=frozenset)
    b0: frozenset[int] = field(default_factory=frozenset)
    b1: frozenset[int] = field(default_factory=frozenset)


class _Search:
    """Bitmask search over the restricted [s]-paths of one gadget."""

    def __init__(self, gg: GadgetGraph):
        self.gg = gg
        self.a_nodes = tuple(sorted(gg.a_set))
        self.a_mask = sum(1 << a for a in self.a_nodes)
        self.partner = gg.partner
        self.cross_label = tuple(
            gg.label(gg.edge_between(i, gg.partner[i])) for i in range(gg.node_count))
        by_vertex = {}
        for i, (x, _) in enumerate(gg.nodes):
            by_vertex.setdefault(x, []).append(i)
        self.clique = tuple(tuple(by_vertex[x]) for x, _ in gg.nodes)

    def walks(self, start: int, used: int, max_cross: int | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
        """All restricted [s]-paths from ``start`` avoiding ``used``, with their labels."""
        path = [start]
        used |= 1 << start

        def extend(cur, used, gamma, depth):
            nxt = self.partner[cur]
            if used >> nxt & 1:
                return
            path.append(nxt)
            gamma ^= self.cross_label[cur]
            if self.a_mask >> nxt & 1:
                yield tuple(path), gamma
            elif max_cross is None or depth < max_cross:
                used |= 1 << nxt
                for hop in self.clique[nxt]:
                    if used >> hop & 1 or used >> self.partner[hop] & 1:
                        continue
                    path.append(hop)
                    yield from extend(hop, used | 1 << hop, gamma, depth + 1)
                    path.pop()
            path.pop()

        yield from extend(start, used, 0, 1)

    def find_nonzero(self, blocked: int, max_cross: int | None = None):
        for a in self.a_nodes:
            if blocked >> a & 1:
                continue
            for nodes, gamma in self.walks(a, blocked, max_cross):
                if gamma:
                    return nodes
        return None

    def shortest_nonzero(self, blocked: int):
        if self.find_nonzero(blocked) is None:
            return None
        depth = 1
        while True:
            found = self.find_nonzero(blocked, depth)
            if found is not None:
                return found
            depth += 1

    def max_packing(self) -> tuple[tuple[int, ...], ...]:
        memo = {}

        def best(used):
            if used in memo:
                return memo[used]
            free = [a for a in self.a_nodes if not used >> a & 1]
            result = ()
            if len(free) >= 2:
                a = free[0]
                result = best(used | 1 << a)
                options = {}
                for nodes, gamma in self.walks(a, used):
                    if gamma:
                        options.setdefault(sum(1 << x for x in nodes), nodes)
                ceiling = len(free) // 2
                for mask, nodes in options.items():
                    if len(result) >= ceiling:
                        break
                    rest = best(used | mask)
                    if 1 + len(rest) > len(result):
                        result = (nodes,) + rest
            memo[used] = result
            return result

        packing = best(0)
        LOGGER.debug('nonzero path packing search: %d states, optimum %d', len(memo), len(packing))
        return packing

    def min_cover(self) -> frozenset[int]:
        failed = set()

        def hit(blocked, budget):
            witness = self.shortest_nonzero(blocked)
            if witness is None:
                return blocked
            if budget == 0 or (blocked, budget) in failed:
                return None
            # blocking either end of a cross edge kills the same restricted paths
            candidates = sorted({min(x, self.partner[x]) for x in witness})
            for x in candidates:
                found = hit(blocked | 1 << x, budget - 1)
                if found is not None:
                    return found
            failed.add((blocked, budget))
            return None

        size = 0
        while True:
            found = hit(0, size)
            if found is not None:
                return frozenset(i for i in range(self.gg.node_count) if found >> i & 1)
            size += 1


def _check_budget(gg: GadgetGraph, budget: int):
    if gg.node_count > budget:
        raise BudgetExceeded('nonzero [s]-path search', budget, gg.node_count)


def _mask(nodes: Iterable[int]) -> int:
    return sum(1 << x for x in set(nodes))


def solve_apaths(gg: GadgetGraph, k: int, budget: int = DEFAULT_APATH_BUDGET) -> APathOutcome:
    """k vertex-disjoint nonzero [s]-paths, or a minimum cover of them.

    The cover is never larger than 2k - 2.
    """
    if k < 0:
        raise BadParameter(f'k must be non-negative, got {k}')
    _check_budget(gg, budget)
    if k == 0:
        return APathOutcome(0, packing=())
    search = _Search(gg)
    packing = search.max_packing()
    if len(packing) >= k:
        return APathOutcome(k, packing=packing[:k])
    cover = search.min_cover()
    if len(cover) > 2 * k - 2:
        raise CertificateRejected(
            f'minimum cover has {len(cover)} nodes, more than 2k-2 = {2 * k - 2}')
    LOGGER.info('packing number %d < %d; cover of %d nodes', len(packing), k, len(cover))
    return APathOutcome(k, cover=cover)


def nu_apaths(gg: GadgetGraph, budget: int = DEFAULT_APATH_BUDGET) -> int:
    _check_budget(gg, budget)
    return len(_Search(gg).max_packing())


def find_nonzero_apath(gg: GadgetGraph, blocked: Iterable[int] = ()):
    """A shortest restricted nonzero [s]-path avoiding ``blocked``, or None."""
    return _Search(gg).shortest_nonzero(_mask(blocked))


def is_apath_cover(gg: GadgetGraph, nodes: Iterable[int]) -> bool:
    return _Search(gg).find_nonzero(_mask(nodes)) is None


def validate_triple(gg: GadgetGraph, triple: ValidTriple):
    y, b0, b1 = triple.y, triple.b0, triple.b1
    every = y | b0 | b1
    if any(not 0 <= x < gg.node_count for x in every):
        raise InvalidTriple('triple mentions nodes outside the gadget')
    if y & b0 or y & b1 or b0 & b1:
        raise InvalidTriple('Y, B0 and B1 must be pairwise disjoint')
    if not (gg.a_set - y) <= b0:
        raise InvalidTriple('every [s]-node outside Y must lie in B0')


def eval_triple(gg: GadgetGraph, triple: ValidTriple) -> int:
    """|Y| plus, over the components K of H(Y, B0, B1), floor(|(B0 u B1) & K| / 2).

    H(Y, B0, B1) is H - Y with labels switched at B1 and the 0-labelled edges
    inside B0 u B1 removed.
    """
    validate_triple(gg, triple)
    b = triple.b0 | triple.b1
    rest = nx.Graph()
    rest.add_nodes_from(x for x in range(gg.node_count) if x not in triple.y)
    for e in gg.h.edges:
        if e.u in triple.y or e.v in triple.y:
            continue
        switched = gg.label(e.id) ^ (e.u in triple.b1) ^ (e.v in triple.b1)
        if e.u in b and e.v in b and switched == 0:
            continue
        rest.add_edge(e.u, e.v)
    return len(triple.y) + sum(len(b & comp) // 2 for comp in nx.connected_components(rest))


def random_valid_triple(gg: GadgetGraph, rng: random.Random) -> ValidTriple:
    parts = {'y': set(), 'b0': set(), 'b1': set(), None: set()}
    for x in range(gg.node_count):
        parts[rng.choice(('y', 'b0', 'b1', None))].add(x)
    moved = gg.a_set - parts['y']
    return ValidTriple(frozenset(parts['y']),
                       frozenset(parts['b0'] | moved),
                       frozenset(parts['b1'] - moved))


def floor_inequality_check(r) -> bool:
    """sum(floor(r_i / 2)) >= floor((sum(r) - (q - 1)) / 2) for q >= 2 entries."""
    r = list(r)
    if len(r) < 2:
        raise BadParameter('need at least two integers')
    if any(x < 0 for x in r):
        raise BadParameter('integers must be non-negative')
    return sum(x // 2 for x in r) >= (sum(r) - (len(r) - 1)) // 2
