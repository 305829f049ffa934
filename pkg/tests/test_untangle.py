from itertools import combinations, permutations

import pytest

from oddtrails.errors import ConnectivityTooLow, InsufficientConnectivity, WitnessInvalid
from oddtrails.fixtures import fig6
from oddtrails.flow import PathFamily, disjoint_paths
from oddtrails.graph_core import Multigraph
from oddtrails.trails import Trail, TrailCollection, check_pairwise_disjoint, verify_trail
from oddtrails.untangle import (CASE_A, CASE_B, CASE_C, CASE_D, CASE_E, CaseTag,
                                classify, potential, transform, untangle)


def assert_uv_trails(g, trails, count):
    assert len(trails) == count
    for t in trails:
        assert verify_trail(g, t, (0, 1), want_odd=True) is None
        assert (t.start, t.end) == (0, 1)
    assert check_pairwise_disjoint(trails) is None


@pytest.fixture
def fig6_two():
    return fig6(2)


def test_uv_collection_is_returned_unchanged(fig6_two):
    records = []
    t = fig6_two.trail_family[0]
    assert untangle(fig6_two.graph, 0, 1, [t], trace=records.append) == [t]
    assert records == []


def test_empty_collection():
    assert untangle(Multigraph(2, []), 0, 1, []) == []


@pytest.mark.parametrize('pair', list(combinations(range(3), 2)))
def test_fig6_any_two_listed_trails(fig6_two, pair):
    g = fig6_two.graph
    chosen = [fig6_two.trail_family[i] for i in pair]
    records = []
    trails = untangle(g, 0, 1, chosen, trace=records.append)
    assert_uv_trails(g, trails, 2)
    assert len(records) <= 2 * g.edge_count + 2
    for r in records[:-1]:
        assert r.phi_after <= r.phi_before - 1


def test_fig6_all_three_trails_need_more_connectivity(fig6_two):
    with pytest.raises(ConnectivityTooLow) as err:
        untangle(fig6_two.graph, 0, 1, list(fig6_two.trail_family))
    assert err.value.connectivity == 5
    assert err.value.required == 6


def test_classify_needs_enough_paths(fig6_two):
    col = TrailCollection.build(fig6_two.graph, 0, 1, fig6_two.trail_family[1:])
    with pytest.raises(InsufficientConnectivity):
        classify(PathFamily(0, 1, ()), col)


def test_all_uv_classifies_as_a_vacuously(fig6_two):
    col = TrailCollection.build(fig6_two.graph, 0, 1, fig6_two.trail_family[:1])
    assert classify(disjoint_paths(fig6_two.graph, 0, 1, 2), col).kind == CASE_A


def test_case_a_concatenates_even_path(fig6_two):
    g = fig6_two.graph
    uz = fig6_two.trail_family[1]                  # u z1 z2 u
    via_w = Trail.from_edges(g, 0, [15, 16])       # u w v, even
    via_x = Trail.from_edges(g, 0, [0, 2])         # u x1 v, even
    paths = PathFamily(0, 1, (via_w, via_x))
    col = TrailCollection.build(g, 0, 1, [uz])
    case = classify(paths, col)
    assert case == CaseTag(CASE_A, paths=(0, 1))
    after = transform(case, paths, col)
    assert after.trails == (Trail(uz.vertices + via_w.vertices[1:], uz.edges + via_w.edges),)
    assert after.k_uv == 1


def test_case_a_odd_path_replaces_trail(fig6_two):
    g = fig6_two.graph
    odd = Trail.from_edges(g, 0, [0, 4, 3])        # u x1 y1 v
    paths = PathFamily(0, 1, (odd, Trail.from_edges(g, 0, [15, 16])))
    col = TrailCollection.build(g, 0, 1, [fig6_two.trail_family[2]])
    after = transform(classify(paths, col), paths, col)
    assert after.trails == (odd,)


@pytest.fixture
def v_triangle():
    # u=0, v=1, x=2, p=3, q=4; odd (v,v)-triangle v x p
    g = Multigraph(5, [(0, 0, 2), (1, 2, 1), (2, 1, 3), (3, 3, 2), (4, 0, 4), (5, 4, 3)])
    t = Trail((1, 2, 3, 1), (1, 3, 2))
    paths = PathFamily(0, 1, (Trail((0, 2, 1), (0, 1)), Trail((0, 4, 3, 1), (4, 5, 2))))
    return g, t, paths


def test_case_b_takes_odd_half(v_triangle):
    g, t, paths = v_triangle
    col = TrailCollection.build(g, 0, 1, [t])
    case = classify(paths, col)
    assert (case.kind, case.paths, case.trail) == (CASE_B, (0,), 0)
    after = transform(case, paths, col)
    assert after.trails == (Trail((0, 2, 3, 1), (0, 3, 2)),)
    assert potential(paths, after).value <= potential(paths, col).value - 1


def test_case_b_instance_untangles(v_triangle):
    g, t, _ = v_triangle
    assert_uv_trails(g, untangle(g, 0, 1, [t]), 1)


def test_case_c_mirrors_case_b():
    # odd (u,u)-triangle u x p
    g = Multigraph(5, [(0, 1, 2), (1, 2, 0), (2, 0, 3), (3, 3, 2), (4, 1, 4), (5, 4, 3)])
    t = Trail((0, 2, 3, 0), (1, 3, 2))
    paths = PathFamily(0, 1, (Trail((0, 2, 1), (1, 0)), Trail((0, 3, 4, 1), (2, 5, 4))))
    col = TrailCollection.build(g, 0, 1, [t])
    case = classify(paths, col)
    assert (case.kind, case.paths, case.trail) == (CASE_C, (0,), 0)
    after = transform(case, paths, col)
    assert after.trails == (Trail((0, 3, 2, 1), (2, 3, 0)),)


@pytest.fixture
def ladder():
    # T = u x1 x2 x3 y v; path i leaves u, rides one edge of T, and drops to v
    edges = [(0, 0, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1),
             (5, 0, 2), (6, 3, 1), (7, 0, 3), (8, 4, 1), (9, 0, 4), (10, 5, 1)]
    g = Multigraph(6, edges)
    t = Trail((0, 2, 3, 4, 5, 1), (0, 1, 2, 3, 4))
    paths = PathFamily(0, 1, (Trail((0, 2, 3, 1), (5, 1, 6)),
                              Trail((0, 3, 4, 1), (7, 2, 8)),
                              Trail((0, 4, 5, 1), (9, 3, 10))))
    return g, t, paths


def test_case_d_rebuilds_from_three_contacts(ladder):
    g, t, paths = ladder
    col = TrailCollection.build(g, 0, 1, [t])
    after = transform(CaseTag(CASE_D, paths=(0, 1, 2), trail=0), paths, col)
    assert after.trails == (Trail((0, 2, 3, 0), (5, 1, 7)),)
    assert after.kinds == ('uu',)
    assert potential(paths, after).value == potential(paths, col).value - 1


def test_case_e_mirrors_case_d(ladder):
    g, t, paths = ladder
    col = TrailCollection.build(g, 0, 1, [t])
    after = transform(CaseTag(CASE_E, paths=(0, 1, 2), trail=0), paths, col)
    assert after.trails == (Trail((1, 5, 4, 1), (10, 3, 8)),)
    assert after.kinds == ('vv',)


# u=0, v=1, x1=2, x2=3, x3=4, y=5, p=6, q=7
# T1 = u x1 x2 x3 y v (edges 0-4), T2 = odd (u,u)-triangle u p q (edges 5-7)
_SPINE = [(0, 0, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1),
          (5, 0, 6), (6, 6, 7), (7, 7, 0)]
_T1 = Trail((0, 2, 3, 4, 5, 1), (0, 1, 2, 3, 4))
_T2 = Trail((0, 6, 7, 0), (5, 6, 7))


@pytest.fixture
def first_contacts_on_mixed_trail():
    # every path meets T1 first, riding edge 0, 1, 2 (against T1) and 3
    g = Multigraph(8, _SPINE + [(8, 2, 1), (9, 0, 2), (10, 3, 1), (11, 0, 4),
                                (12, 3, 1), (13, 0, 4), (14, 5, 1)])
    paths = (Trail((0, 2, 1), (0, 8)),
             Trail((0, 2, 3, 1), (9, 1, 10)),
             Trail((0, 4, 3, 1), (11, 2, 12)),
             Trail((0, 4, 5, 1), (13, 3, 14)))
    return g, paths


@pytest.fixture
def last_contacts_on_mixed_trail():
    # two paths leave u along T2 before reaching T1; all four end on T1
    g = Multigraph(8, _SPINE + [(8, 6, 5), (9, 7, 4), (10, 5, 1), (11, 0, 4),
                                (12, 3, 1), (13, 0, 2), (14, 3, 1)])
    paths = (Trail((0, 6, 5, 1), (5, 8, 4)),
             Trail((0, 7, 4, 5, 1), (7, 9, 3, 10)),
             Trail((0, 4, 3, 1), (11, 2, 12)),
             Trail((0, 2, 3, 1), (13, 1, 14)))
    return g, paths


def test_classify_picks_case_d(first_contacts_on_mixed_trail):
    g, paths = first_contacts_on_mixed_trail
    col = TrailCollection.build(g, 0, 1, [_T1, _T2])
    case = classify(PathFamily(0, 1, paths), col)
    assert (case.kind, case.paths, case.trail) == (CASE_D, (0, 1, 2), 0)
    after = transform(case, PathFamily(0, 1, paths), col)
    assert after.trails[0] == Trail((0, 4, 5, 1), (11, 3, 4))


def test_case_d_instance_untangles(first_contacts_on_mixed_trail):
    g, paths = first_contacts_on_mixed_trail
    records = []
    trails = untangle(g, 0, 1, [_T1, _T2], trace=records.append,
                      paths=PathFamily(0, 1, paths))
    assert_uv_trails(g, trails, 2)
    assert trails == [Trail((0, 4, 5, 1), (11, 3, 4)),
                      Trail((0, 6, 7, 0, 2, 1), (5, 6, 7, 0, 8))]
    assert [(r.case, r.phi_before, r.phi_after, r.k_uv) for r in records] == [
        (CASE_D, 7, 3, 1), (CASE_A, 3, 4, 2)]


@pytest.mark.parametrize('order', list(permutations(range(4))))
def test_case_d_instance_any_path_order(first_contacts_on_mixed_trail, order):
    g, paths = first_contacts_on_mixed_trail
    records = []
    trails = untangle(g, 0, 1, [_T1, _T2], trace=records.append,
                      paths=PathFamily(0, 1, tuple(paths[i] for i in order)))
    assert_uv_trails(g, trails, 2)
    assert [r.case for r in records] == [CASE_D, CASE_A]


def test_classify_picks_case_e(last_contacts_on_mixed_trail):
    g, paths = last_contacts_on_mixed_trail
    col = TrailCollection.build(g, 0, 1, [_T1, _T2])
    case = classify(PathFamily(0, 1, paths), col)
    assert (case.kind, case.paths, case.trail) == (CASE_E, (0, 1, 2), 0)
    after = transform(case, PathFamily(0, 1, paths), col)
    assert after.trails[0] == Trail((0, 2, 3, 1), (0, 1, 12))


def test_case_e_instance_untangles(last_contacts_on_mixed_trail):
    g, paths = last_contacts_on_mixed_trail
    records = []
    trails = untangle(g, 0, 1, [_T1, _T2], trace=records.append,
                      paths=PathFamily(0, 1, paths))
    assert_uv_trails(g, trails, 2)
    assert trails == [Trail((0, 2, 3, 1), (0, 1, 12)),
                      Trail((0, 6, 5, 1), (5, 8, 4))]
    assert [(r.case, r.phi_before, r.phi_after, r.k_uv) for r in records] == [
        (CASE_E, 11, 7, 1), (CASE_C, 7, 4, 2)]


def test_supplied_paths_are_checked(first_contacts_on_mixed_trail):
    g, paths = first_contacts_on_mixed_trail
    with pytest.raises(WitnessInvalid):
        untangle(g, 0, 1, [_T1, _T2], paths=PathFamily(1, 0, paths))
    with pytest.raises(WitnessInvalid):
        untangle(g, 0, 1, [_T1, _T2], paths=PathFamily(0, 1, paths[:3] + (paths[0],)))
