import pytest
from hypothesis import given, settings, strategies as st

from oddtrails.errors import BadParameter, BudgetExceeded, CertificateRejected, InvalidCollection
from oddtrails.fixtures import fig2, fig8, random_multigraph
from oddtrails.graph_core import Multigraph
from oddtrails.minmax import (BipartiteCertificate, certificate_value,
                              cover_from_certificate, minmax_rhs,
                              verify_certificate_upper_bound)
from oddtrails.oracle import is_cover, nu_exact
from oddtrails.trails import Trail

BOWTIE = Multigraph(5, [(0, 0, 1), (1, 1, 2), (2, 2, 0), (3, 0, 3), (4, 3, 4), (5, 4, 0)])


def test_triangle_certificate(triangle):
    assert certificate_value(triangle, {0}, ()) == 1
    cert = minmax_rhs(triangle, 0)
    assert cert.value == 1
    assert (cert.s0, cert.s1, cert.f) == (frozenset({0}), frozenset(), frozenset())
    assert cert.to_json() == {'S0': [0], 'S1': [], 'value': 1}
    assert cover_from_certificate(triangle, 0, cert) == frozenset({2})


def test_whole_triangle_is_not_balanced(triangle):
    # one triangle edge always falls outside F
    assert certificate_value(triangle, {0, 2}, {1}) == 1


def test_even_cycle_is_balanced():
    square = Multigraph(4, [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 0)])
    assert certificate_value(square, {0, 2}, {1, 3}) == 0
    assert minmax_rhs(square, 0).value == 0


def test_unsigned_edges_flip_the_sides():
    g = Multigraph(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)], sigma=[0, 1])
    assert certificate_value(g, {0, 1, 2}, ()) == 2
    assert certificate_value(g, {0, 2}, {1}) == 0
    assert minmax_rhs(g, 0).value == nu_exact(g, 0, 0) == 0


def test_single_edge_and_bowtie():
    assert minmax_rhs(Multigraph(2, [(0, 0, 1)]), 0).value == 0
    assert minmax_rhs(BOWTIE, 0).value == 2


def test_overlapping_sides_rejected(triangle):
    with pytest.raises(BadParameter):
        certificate_value(triangle, {0, 1}, {1})


def test_budget():
    with pytest.raises(BudgetExceeded):
        minmax_rhs(fig2(1).graph, 0, budget=5)


def test_upper_bound_check(triangle):
    cert = minmax_rhs(triangle, 0)
    trail = Trail((0, 1, 2, 0), (0, 1, 2))
    assert verify_certificate_upper_bound(triangle, 0, cert, [trail])
    forged = BipartiteCertificate(0, frozenset({0}), frozenset(), frozenset(), 0)
    with pytest.raises(CertificateRejected):
        verify_certificate_upper_bound(triangle, 0, forged, [trail])
    with pytest.raises(InvalidCollection):
        verify_certificate_upper_bound(triangle, 0, cert, [Trail((0, 1), (0,))])


@pytest.mark.slow
def test_identified_hk_value():
    inst = fig8(1, 2)
    assert minmax_rhs(inst.graph, inst.u).value == 1


@pytest.mark.property_based
@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 6), m=st.integers(0, 9),
       sigma_prob=st.sampled_from([0.5, 1.0]))
def test_certificate_matches_packing_number(seed, n, m, sigma_prob):
    g = random_multigraph(seed, n, m, parallel_prob=0.3, sigma_prob=sigma_prob)
    cert = minmax_rhs(g, 0)
    assert cert.value == nu_exact(g, 0, 0)
    cover = cover_from_certificate(g, 0, cert)
    assert len(cover) <= 2 * cert.value
    assert is_cover(g, 0, 0, cover)


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 6), m=st.integers(0, 8),
       a=st.integers(0, 5), b=st.integers(0, 5))
def test_adding_an_edge_raises_value_by_at_most_one(seed, n, m, a, b):
    g = random_multigraph(seed, n, m)
    a, b = a % n, b % n
    if a == b:
        b = (a + 1) % n
    bigger = Multigraph(n, [(e.id, e.u, e.v) for e in g.edges] + [(m, a, b)])
    before, after = minmax_rhs(g, 0).value, minmax_rhs(bigger, 0).value
    assert before <= after <= before + 1
