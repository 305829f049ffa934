"""Turn odd ({u,v},{u,v})-trails into as many odd (u,v)-trails.

A fixed family of 2k edge-disjoint (u,v)-paths is laid over the collection,
and the collection is rewritten one trail at a time until every trail runs
from u to v. Each rewrite lowers the potential ``2 * contacts - k_uv``.
"""
from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Callable, Sequence

from .errors import (ClassificationFailure, ConnectivityTooLow,
                     InsufficientConnectivity, IterationBoundExceeded,
                     PotentialNotDecreasing, WitnessInvalid)
from .flow import PathFamily, disjoint_paths, edge_connectivity
from .graph_core import Multigraph
from .trails import (UU, UV, VV, Contact, Trail, TrailCollection,
                     check_pairwise_disjoint, concat, contacts, reverse,
                     split_at, subtrail, total_contacts, trail_parity,
                     verify_trail)

LOGGER = logging.getLogger(__name__)

CASE_A, CASE_B, CASE_C, CASE_D, CASE_E = 'A', 'B', 'C', 'D', 'E'


@dataclass(frozen=True)
class Potential:
    contacts: int
    k_uv: int

    @property
    def value(self) -> int:
        return 2 * self.contacts - self.k_uv


@dataclass(frozen=True)
class CaseTag:
    """Which rewrite applies, with its witnesses.

    ``paths`` are path indices (the zero-contact paths for case A), ``trail`` the
    index of the trail being rewritten and ``contacts`` the witnessing contact
    of each path with that trail.
    """
    kind: str
    paths: tuple[int, ...] = ()
    trail: int | None = None
    contacts: tuple[Contact, ...] = ()


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    case: str
    phi_before: int
    phi_after: int
    k_uv: int
    contacts: int

    def to_json(self) -> dict:
        return {'iteration': self.iteration, 'case': self.case, 'phi': self.phi_after,
                'phi_before': self.phi_before, 'k_uv': self.k_uv,
                'contacts': self.contacts}


def potential(paths: PathFamily, col: TrailCollection) -> Potential:
    return Potential(total_contacts(paths, col.trails).total, col.k_uv)


def _contact_index(paths: PathFamily, col: TrailCollection):
    """Per path, its contacts with every trail as (contact, trail index) pairs."""
    table = []
    for p in paths:
        row = []
        for j, t in enumerate(col.trails):
            row.extend((c, j) for c in contacts(p, t))
        table.append(row)
    return table


def classify(paths: PathFamily, col: TrailCollection) -> CaseTag:
    if len(paths) < 2 * len(col):
        raise InsufficientConnectivity(
            f'{len(paths)} paths cannot untangle {len(col)} trails')
    table = _contact_index(paths, col)
    firsts = [min(row, key=lambda ct: ct[0].p_range[0]) if row else None for row in table]
    lasts = [max(row, key=lambda ct: ct[0].p_range[1]) if row else None for row in table]

    zero = tuple(i for i, row in enumerate(table) if not row)
    if len(zero) >= col.k_uu + col.k_vv:
        return CaseTag(CASE_A, paths=zero)

    for i, first in enumerate(firsts):
        if first is not None and col.kinds[first[1]] == VV:
            return CaseTag(CASE_B, paths=(i,), trail=first[1], contacts=(first[0],))
    for i, last in enumerate(lasts):
        if last is not None and col.kinds[last[1]] == UU:
            return CaseTag(CASE_C, paths=(i,), trail=last[1], contacts=(last[0],))

    for kind, ends, allowed in ((CASE_D, firsts, (UU, UV)), (CASE_E, lasts, (UV, VV))):
        grouped = {}
        for i, hit in enumerate(ends):
            if hit is not None and col.kinds[hit[1]] in allowed:
                grouped.setdefault(hit[1], []).append(i)
        for j in sorted(grouped):
            if len(grouped[j]) >= 3:
                chosen = tuple(grouped[j][:3])
                return CaseTag(kind, paths=chosen, trail=j,
                               contacts=tuple(ends[i][0] for i in chosen))
    raise ClassificationFailure(
        f'no rewrite applies (k_uu={col.k_uu}, k_vv={col.k_vv}, k_uv={col.k_uv})')


def _spliced_half(g: Multigraph, path: Trail, closed: Trail, contact: Contact) -> Trail:
    """Walk ``path`` up to its contact with the closed trail, then finish along
    whichever side of the closed trail makes the result odd."""
    p = contact.entry
    head = subtrail(path, 0, contact.p_range[0])
    if closed.vertices[p] != head.end:
        raise WitnessInvalid('contact entry does not sit on the path')
    s1, s2 = split_at(closed, p)
    for tail in (reverse(s1), s2):
        candidate = concat(head, tail)
        if trail_parity(g, candidate):
            return candidate
    raise WitnessInvalid('neither half of the closed trail gives an odd trail')


def _three_way(g: Multigraph, roots: Sequence[Trail], base: Trail) -> Trail:
    """Rewrite ``base`` using three paths whose first contact is with it.

    ``roots`` and ``base`` all start at the same terminal. The pieces of
    ``base`` between the three entry occurrences are joined to the path
    prefixes so that T1..T4 partition the edges of ``base`` plus the prefixes
    twice over; the first odd one wins.
    """
    entries = []
    for path in roots:
        found = contacts(path, base)
        if not found:
            raise WitnessInvalid('a witness path does not touch the rewritten trail')
        entries.append((found[0], path))
    entries.sort(key=lambda cp: cp[0].t_range[0])
    if len({c.t_range[0] for c, _ in entries}) != 3:
        raise WitnessInvalid('first contacts overlap on the rewritten trail')
    cuts = [c.entry for c, _ in entries]
    prefixes = [subtrail(path, 0, c.p_range[0]) for c, path in entries]
    bounds = [0] + cuts + [len(base)]
    pieces = [subtrail(base, bounds[i], bounds[i + 1]) for i in range(4)]
    candidates = [concat(pieces[0], reverse(prefixes[0]))]
    for i in (1, 2):
        candidates.append(concat(concat(prefixes[i - 1], pieces[i]), reverse(prefixes[i])))
    candidates.append(concat(prefixes[2], pieces[3]))
    for t in candidates:
        if trail_parity(g, t):
            return t
    raise WitnessInvalid('none of the four rewritten trails is odd')


def transform(case: CaseTag, paths: PathFamily, col: TrailCollection) -> TrailCollection:
    g = col.graph
    if case.kind == CASE_A:
        closed = [j for j, kind in enumerate(col.kinds) if kind != UV]
        if len(case.paths) < len(closed):
            raise WitnessInvalid(
                f'{len(case.paths)} contact-free paths for {len(closed)} closed trails')
        trails = list(col.trails)
        for j, i in zip(closed, case.paths):
            path = paths[i]
            if trail_parity(g, path):
                trails[j] = path
            elif col.kinds[j] == UU:
                trails[j] = concat(trails[j], path)
            else:
                trails[j] = concat(path, trails[j])
        return TrailCollection.build(g, col.u, col.v, trails)

    target = col.trails[case.trail]
    if case.kind == CASE_B:
        rewritten = _spliced_half(g, paths[case.paths[0]], target, case.contacts[0])
    elif case.kind == CASE_C:
        # mirror of B: walk the path backwards from v
        back = reverse(paths[case.paths[0]])
        rewritten = _spliced_half(g, back, target, contacts(back, target)[0])
    elif case.kind == CASE_D:
        rewritten = _three_way(g, [paths[i] for i in case.paths], target)
    elif case.kind == CASE_E:
        base = target if col.kinds[case.trail] == VV else reverse(target)
        rewritten = _three_way(g, [reverse(paths[i]) for i in case.paths], base)
    else:
        raise WitnessInvalid(f'unknown case {case.kind!r}')
    return col.replaced(case.trail, rewritten)


def _check_paths(g: Multigraph, u: int, v: int, paths: PathFamily):
    if (paths.u, paths.v) != (u, v):
        raise WitnessInvalid(f'path family joins {paths.u}..{paths.v}, expected {u}..{v}')
    for i, p in enumerate(paths):
        problem = verify_trail(g, p, None, want_odd=None)
        if problem is not None:
            raise WitnessInvalid(f'path {i}: {problem.message}')
        if (p.start, p.end) != (u, v) or len(set(p.vertices)) != len(p.vertices):
            raise WitnessInvalid(f'path {i} is not a simple ({u},{v})-path')
    shared = check_pairwise_disjoint(paths)
    if shared is not None:
        raise WitnessInvalid(f'edge {shared} is used by two paths')


def untangle(g: Multigraph, u: int, v: int, trails,
             trace: Callable[[IterationRecord], None] | None = None,
             paths: PathFamily | None = None) -> list[Trail]:
    """Return ``len(trails)`` edge-disjoint odd (u,v)-trails.

    ``trails`` is a TrailCollection or a sequence of odd trails with ends in
    {u, v}. Needs ``lambda(u, v) >= 2 * len(trails)``. ``paths`` overrides the
    edge-disjoint (u,v)-paths the rewrites are measured against.
    """
    col = trails if isinstance(trails, TrailCollection) else TrailCollection.build(g, u, v, trails)
    k = len(col)
    if k == 0:
        return []
    lam = edge_connectivity(g, u, v)
    if lam < 2 * k:
        raise ConnectivityTooLow(lam, 2 * k)
    if paths is None:
        paths = disjoint_paths(g, u, v, 2 * k)
    else:
        _check_paths(g, u, v, paths)
    bound = 2 * g.edge_count + k
    phi = potential(paths, col)
    iteration = 0
    while col.k_uv < k:
        iteration += 1
        if iteration > bound:
            raise IterationBoundExceeded(f'no convergence after {bound} rewrites')
        case = classify(paths, col)
        col = transform(case, paths, col)
        after = potential(paths, col)
        if col.k_uv < k and after.value > phi.value - 1:
            raise PotentialNotDecreasing(
                f'case {case.kind}: potential went from {phi.value} to {after.value}')
        record = IterationRecord(iteration, case.kind, phi.value, after.value,
                                 col.k_uv, after.contacts)
        LOGGER.debug('rewrite %d: case %s, phi %d -> %d, k_uv=%d',
                     iteration, case.kind, phi.value, after.value, col.k_uv)
        if trace is not None:
            trace(record)
        phi = after
    LOGGER.info('untangled %d trails in %d rewrites', k, iteration)
    return list(col.trails)
