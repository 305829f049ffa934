from oddtrails.driver import solve_uv
from oddtrails.fixtures import fig2, fig6
from oddtrails.trails import check_pairwise_disjoint, verify_trail


def test_fig2_single_block_packs_one_trail():
    inst = fig2(1)
    outcome = solve_uv(inst.graph, inst.u, inst.v, 1)
    assert outcome.is_packing
    assert all(verify_trail(inst.graph, t, (inst.u, inst.v)) is None for t in outcome.trails)


def test_fig6_packs_two_and_covers_three():
    inst = fig6(2)
    outcome = solve_uv(inst.graph, inst.u, inst.v, 2)
    assert outcome.is_packing
    assert check_pairwise_disjoint(outcome.trails) is None
    cover = solve_uv(inst.graph, inst.u, inst.v, 3)
    assert not cover.is_packing and len(cover.cover) <= 5


if __name__ == '__main__':
    test_fig2_single_block_packs_one_trail()
    print('fig2 packing test OK')
    test_fig6_packs_two_and_covers_three()
    print('fig6 packing/cover test OK')
