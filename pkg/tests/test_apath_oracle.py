import random

import pytest
from hypothesis import given, settings, strategies as st

from oddtrails.apath_oracle import (ValidTriple, eval_triple, find_nonzero_apath,
                                    floor_inequality_check, is_apath_cover,
                                    nu_apaths, random_valid_triple, solve_apaths,
                                    validate_triple)
from oddtrails.errors import BadParameter, BudgetExceeded, InvalidTriple
from oddtrails.fixtures import fig2, fig8, random_multigraph
from oddtrails.gadget import a_path_gamma, build_gadget, is_a_path
from oddtrails.graph_core import Multigraph
from oddtrails.oracle import nu_exact

BOWTIE = Multigraph(5, [(0, 0, 1), (1, 1, 2), (2, 2, 0), (3, 0, 3), (4, 3, 4), (5, 4, 0)])


def test_single_edge_has_no_nonzero_path():
    gg = build_gadget(Multigraph(2, [(0, 0, 1)]), 0)
    found = solve_apaths(gg, 1)
    assert not found.is_packing
    assert found.cover == frozenset()


def test_triangle_packing(triangle):
    gg = build_gadget(triangle, 0)
    found = solve_apaths(gg, 1)
    assert found.is_packing
    (path,) = found.packing
    assert is_a_path(gg, path)
    assert a_path_gamma(gg, path) == 1


def test_triangle_cover_for_two(triangle):
    gg = build_gadget(triangle, 0)
    found = solve_apaths(gg, 2)
    assert not found.is_packing
    assert len(found.cover) <= 2
    assert is_apath_cover(gg, found.cover)
    assert not is_apath_cover(gg, [])


def test_zero_request_is_empty_packing(triangle):
    assert solve_apaths(build_gadget(triangle, 0), 0).packing == ()


def test_packing_numbers():
    assert nu_apaths(build_gadget(BOWTIE, 0)) == 2
    assert nu_apaths(build_gadget(Multigraph(3, [(0, 0, 1)]), 2)) == 0


@pytest.mark.slow
def test_packing_number_of_identified_hk():
    inst = fig8(1, 2)
    assert nu_apaths(build_gadget(inst.graph, inst.u)) == 1


def test_shortest_witness(triangle):
    gg = build_gadget(triangle, 0)
    assert find_nonzero_apath(gg) == (0, 2, 3, 4, 5, 1)
    assert find_nonzero_apath(gg, blocked=[3]) is None


def test_budget_is_enforced():
    gg = build_gadget(fig2(2).graph, 0)
    with pytest.raises(BudgetExceeded) as err:
        solve_apaths(gg, 1)
    assert (err.value.cap, err.value.size) == (40, 64)


def test_eval_triple_single_edge():
    gg = build_gadget(Multigraph(2, [(0, 0, 1)]), 0)
    assert eval_triple(gg, ValidTriple(b0=gg.a_set)) == 0


def test_invalid_triples(triangle):
    gg = build_gadget(triangle, 0)
    with pytest.raises(InvalidTriple):
        eval_triple(gg, ValidTriple(y=frozenset({0}), b0=frozenset({0, 1})))
    with pytest.raises(InvalidTriple):
        eval_triple(gg, ValidTriple(b0=frozenset({0})))
    with pytest.raises(InvalidTriple):
        eval_triple(gg, ValidTriple(y=frozenset({99}), b0=gg.a_set))


def test_triangle_triple_values(triangle):
    gg = build_gadget(triangle, 0)
    # all of H kept: one component holding both [s]-nodes
    assert eval_triple(gg, ValidTriple(b0=gg.a_set)) == 1
    # deleting [s] costs |Y| = 2
    assert eval_triple(gg, ValidTriple(y=gg.a_set)) == 2


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 5), m=st.integers(1, 8),
       sigma_prob=st.sampled_from([0.5, 1.0]))
def test_weak_duality_of_triples(seed, n, m, sigma_prob):
    g = random_multigraph(seed, n, m, parallel_prob=0.3, sigma_prob=sigma_prob)
    gg = build_gadget(g, 0)
    nu = nu_apaths(gg)
    rng = random.Random(seed)
    for _ in range(10):
        triple = random_valid_triple(gg, rng)
        validate_triple(gg, triple)
        assert eval_triple(gg, triple) >= nu


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 5), m=st.integers(0, 8),
       sigma_prob=st.sampled_from([0.0, 0.5, 1.0]))
def test_packing_number_matches_trail_oracle(seed, n, m, sigma_prob):
    g = random_multigraph(seed, n, m, parallel_prob=0.3, sigma_prob=sigma_prob)
    assert nu_apaths(build_gadget(g, 0)) == nu_exact(g, 0, 0)


def test_floor_inequality_examples():
    assert floor_inequality_check([1, 1])
    assert floor_inequality_check([3, 5])
    with pytest.raises(BadParameter):
        floor_inequality_check([4])
    with pytest.raises(BadParameter):
        floor_inequality_check([1, -1])


@pytest.mark.property_based
@given(st.lists(st.integers(0, 50), min_size=2, max_size=12))
def test_floor_inequality_always_holds(r):
    assert floor_inequality_check(r)
