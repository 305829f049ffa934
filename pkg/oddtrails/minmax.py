"""Exact evaluation of the bipartite-certificate minimum for (s,s)-trails.

For S containing s with sides (S0, S1), let F be the edges of S whose
label matches whether they cross between the sides (all of E(S0, S1) when
every edge is signed). The value
``|E(S) - F| + sum over components C of G - S of floor(|E(S, C)| / 2)``
bounds the number of edge-disjoint odd (s,s)-trails, and the minimum over
all choices equals it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
import logging

from networkx.utils import UnionFind

from .config import DEFAULT_MINMAX_BUDGET
from .errors import BadParameter, BudgetExceeded, CertificateRejected, InvalidCollection
from .graph_core import Multigraph
from .trails import TrailCollection

LOGGER = logging.getLogger(__name__)

OUTSIDE, SIDE0, SIDE1 = 0, 1, 2


@dataclass(frozen=True)
class BipartiteCertificate:
    s: int
    s0: frozenset[int]
    s1: frozenset[int]
    f: frozenset[int]
    value: int

    @property
    def support(self) -> frozenset[int]:
        return self.s0 | self.s1

    def to_json(self) -> dict:
        return {'S0': sorted(self.s0), 'S1': sorted(self.s1), 'value': self.value}


def _evaluate(g: Multigraph, side):
    """Certificate value for a side assignment (list indexed by vertex)."""
    inside = 0
    joins = UnionFind(x for x in range(g.vertex_count) if side[x] == OUTSIDE)
    for e in g.edges:
        a, b = side[e.u], side[e.v]
        if a == OUTSIDE and b == OUTSIDE:
            joins.union(e.u, e.v)
        elif OUTSIDE not in (a, b) and (a != b) != (e.id in g.sigma):
            # inside S but not in F
            inside += 1
    crossing = {}
    for e in g.edges:
        a, b = side[e.u], side[e.v]
        if (a == OUTSIDE) != (b == OUTSIDE):
            root = joins[e.u if a == OUTSIDE else e.v]
            crossing[root] = crossing.get(root, 0) + 1
    return inside + sum(n // 2 for n in crossing.values())


def certificate_value(g: Multigraph, s0, s1) -> int:
    s0, s1 = frozenset(s0), frozenset(s1)
    if s0 & s1:
        raise BadParameter('the two sides of a certificate must be disjoint')
    side = [SIDE0 if x in s0 else SIDE1 if x in s1 else OUTSIDE
            for x in range(g.vertex_count)]
    return _evaluate(g, side)


def _certificate(g: Multigraph, s: int, side) -> BipartiteCertificate:
    s0 = frozenset(x for x in range(g.vertex_count) if side[x] == SIDE0)
    s1 = frozenset(x for x in range(g.vertex_count) if side[x] == SIDE1)
    f = frozenset(e.id for e in g.edges
                  if OUTSIDE not in (side[e.u], side[e.v])
                  and (side[e.u] != side[e.v]) == (e.id in g.sigma))
    return BipartiteCertificate(s, s0, s1, f, _evaluate(g, side))


def minmax_rhs(g: Multigraph, s: int, budget: int = DEFAULT_MINMAX_BUDGET) -> BipartiteCertificate:
    """Minimum-value certificate; ties go to the smallest S, then the
    lexicographically least assignment (s is always on side 0)."""
    g.check_vertex(s)
    if g.vertex_count > budget:
        raise BudgetExceeded('certificate enumeration', budget, g.vertex_count)
    others = [x for x in range(g.vertex_count) if x != s]
    best_key, best_side = None, None
    side = [OUTSIDE] * g.vertex_count
    side[s] = SIDE0
    for digits in product((OUTSIDE, SIDE0, SIDE1), repeat=len(others)):
        for x, d in zip(others, digits):
            side[x] = d
        key = (_evaluate(g, side), sum(1 for d in digits if d != OUTSIDE), digits)
        if best_key is None or key < best_key:
            best_key, best_side = key, list(side)
    cert = _certificate(g, s, best_side)
    LOGGER.debug('certificate for s=%d: value %d over %d assignments',
                 s, cert.value, 3 ** len(others))
    return cert


def cover_from_certificate(g: Multigraph, s: int, cert: BipartiteCertificate) -> frozenset[int]:
    """E(S) - F plus all but the lowest-id edge of each E(S, C)."""
    inside = cert.support
    chosen = {e.id for e in g.edges
              if e.u in inside and e.v in inside and e.id not in cert.f}
    joins = UnionFind(x for x in range(g.vertex_count) if x not in inside)
    for e in g.edges:
        if e.u not in inside and e.v not in inside:
            joins.union(e.u, e.v)
    crossing = {}
    for e in g.edges:
        if (e.u in inside) != (e.v in inside):
            outside = e.v if e.u in inside else e.u
            crossing.setdefault(joins[outside], []).append(e.id)
    for ids in crossing.values():
        chosen.update(sorted(ids)[1:])
    return frozenset(chosen)


def verify_certificate_upper_bound(g: Multigraph, s: int, cert: BipartiteCertificate,
                                   trails) -> bool:
    """True when the claimed packing is no larger than the certificate value.

    Both sides are checked first: the trails must be edge-disjoint odd
    (s,s)-trails and the certificate's value must match its sides.
    """
    collection = TrailCollection.build(g, s, s, list(trails))
    if any(t.start != s or t.end != s for t in collection.trails):
        raise InvalidCollection(f'every trail must start and end at {s}')
    if s not in cert.s0 or cert.s0 & cert.s1:
        raise CertificateRejected('certificate sides are malformed')
    if certificate_value(g, cert.s0, cert.s1) != cert.value:
        raise CertificateRejected('certificate value does not match its sides')
    return len(collection) <= cert.value
