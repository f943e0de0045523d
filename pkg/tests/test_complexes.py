import pytest

from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes
from doodlinv.complexes.collision import collide, collision_map, map_element, rotate_word
from doodlinv.complexes.graph_encoding import graph_cycle_encoding
from doodlinv.complexes.mixed import corner_chains, corner_end, corner_image, mixed_corner, rotate_corner
from doodlinv.complexes.order_complex import chain_boundary, complex_to_dict, full_order_complex_dimension, \
    relative_complex, relative_homology
from doodlinv.complexes.poset import build_poset, poset_of_word
from doodlinv.errors import IllegalCollision
from doodlinv.homology.chain_homology import GroupPresentation


def nonzero(groups: dict) -> dict:
    return {d: g for d, g in groups.items() if not g.is_zero}


def test_five_point_poset():
    poset = build_poset(CliqueClass.from_code('AAAAA'))
    sizes = sorted(sum(n for _, n in S[0]) for S in poset.elements)
    assert sizes == [3]*10 + [4]*5 + [5]


def test_double_point_rays():
    poset = build_poset(CliqueClass.from_code('A2AA'))
    assert len(poset.atoms) == 3
    assert nonzero(relative_homology(CliqueClass.from_code('A2AA'))) == {1: GroupPresentation(2)}


def test_cross():
    assert nonzero(relative_homology(CliqueClass.from_code('AAAA'))) == {1: GroupPresentation(3)}


def test_five_configuration():
    assert nonzero(relative_homology(CliqueClass.from_code('AAAAA'))) == {2: GroupPresentation(6)}


def test_six_points_fourfold():
    groups = relative_homology(CliqueClass.from_code('AAAAAA', 4))
    assert nonzero(groups) == {2: GroupPresentation(10)}


def test_two_triples_are_a_segment_pair():
    assert nonzero(relative_homology(CliqueClass.from_code('AAABBB'))) == {1: GroupPresentation(1)}


def test_relative_complexes_square_to_zero():
    for cls in enumerate_classes(3, max_complexity=4, max_double_points=1):
        relative_complex(cls).check()


@pytest.mark.parametrize('n, rank', [(5, 6), (6, 10)])
def test_graph_cycles_are_relative_cycles(n, rank):
    encoding = graph_cycle_encoding(n)
    basis = encoding.cycle_space_basis()
    assert len(basis) == rank
    assert all(encoding.boundary(chain) == {} for chain in basis)


def test_graph_cycle_round_trip():
    encoding = graph_cycle_encoding(5)
    chain = encoding.chain_from_graph_cycle([0, 1, 2])
    assert encoding.graph_cycle_from_chain(chain) == {(0, 1): 1, (1, 2): 1, (0, 2): -1}


def test_same_group_collision():
    result = collide(((0, 1), (0, 1), (0, 1), (0, 1)), 0)
    assert result.word == ((0, 2), (0, 1), (0, 1))
    assert result.position_map == (0, 0, 1, 2)
    assert result.merged_position == 0
    assert result.same_group


def test_wrap_collision():
    result = collide(((0, 1), (1, 1), (0, 1)), 0, wrap=True)
    assert result.word == ((0, 2), (1, 1))
    assert result.position_map == (0, 1, 0)


def test_illegal_collisions():
    with pytest.raises(IllegalCollision):
        collide(((0, 2), (0, 2)), 0)
    with pytest.raises(IllegalCollision):
        collide(((0, 1),)*4, 1, k=4)
    with pytest.raises(IllegalCollision):
        collide(((0, 1), (0, 1)), 1)


def test_rotate_word():
    word, position_map = rotate_word(((0, 1), (1, 1), (1, 1)))
    assert word == ((0, 1), (1, 1), (0, 1))
    assert position_map == (1, 2, 0)


def test_collision_map_is_a_chain_map():
    word = tuple(CliqueClass.from_code('AAAAA').slots)
    complex_ = relative_complex(word, 3)
    merged, image = collision_map({top: 1 for top in complex_.cells[2]}, word, 0)
    assert merged == ((0, 2), (0, 1), (0, 1), (0, 1))
    assert image
    assert all(len(s) == 3 for s in image)


def test_complex_export():
    cls = CliqueClass.from_code('AAAA')
    out = complex_to_dict(relative_complex(cls), tuple(cls.slots))
    assert out['word'] == 'AAAA'
    assert len(out['simplices']['1']) == 4
    assert out['boundaries']['1'] == [[1, 1, 1, 1]]


SINGLES = ((0, 1),)*4
ALTERNATING = ((0, 1), (1, 1))*3


def test_order_complex_dimension():
    for cls in enumerate_classes(3, max_complexity=4, max_double_points=1):
        assert full_order_complex_dimension(tuple(cls.slots), 3) == cls.size - 2*cls.num_groups - 1


def test_arrow_boundary_is_edge_minus_head():
    encoding = graph_cycle_encoding(5)
    expected = dict(encoding.edge_chain(1, 3))
    for simplex, value in encoding.marked_vertex_chain(3).items():
        expected[simplex] = expected.get(simplex, 0) - value
    assert chain_boundary(encoding.arrow_chain(1, 3)) == expected


def test_cross_group_merge_shares_the_point():
    word = ((0, 1),)*3 + ((1, 1),)*3
    chi = poset_of_word(word, 3).chi
    assert map_element(chi, (0, 1, 2, 2, 3, 4)) == poset_of_word(((0, 1),)*5, 3).chi


def test_mixed_corners_of_alternating_triples():
    corner = mixed_corner(ALTERNATING, 0, 2)
    assert corner.key == (SINGLES, (0, 1), 1)
    assert not corner.flipped
    opposite = mixed_corner(ALTERNATING, 0, 3)
    assert opposite.key == (SINGLES, (0, 2), -1)
    assert mixed_corner(ALTERNATING, 0, 1) is None
    assert mixed_corner(((0, 1),)*3 + ((1, 1),)*3, 0, 3) is None


def test_corner_image_agrees_for_both_orders():
    corner = mixed_corner(ALTERNATING, 0, 2)
    chi = poset_of_word(ALTERNATING, 3).chi
    even = (((0, 1), (2, 1), (4, 1)),)
    assert corner_image((even, chi), ALTERNATING, corner) == ((((0, 1), (1, 1), (2, 1)),),)


def test_corner_rotation_and_ends():
    key, rotation, flipped = rotate_corner((SINGLES, (0, 3), 1))
    assert key == (SINGLES, (0, 1), 1)
    assert rotation == (1, 2, 3, 0)
    assert flipped
    assert corner_end((SINGLES, (0, 1), 1), 0) == ((0, 1), (0, 2), (0, 1), (0, 1))
    assert corner_end((SINGLES, (0, 1), 1), 1) == ((0, 2), (0, 1), (0, 1), (0, 1))


def test_corner_fiber_is_a_cone():
    chains = corner_chains(SINGLES, 3)
    sizes = {d: len(c) for d, c in chains.items()}
    assert sizes == {0: 1, 1: 5, 2: 4}
    assert sum((-1)**d*n for d, n in sizes.items()) == 0


def test_alternating_cycle_cancels_over_five_sites():
    # each cross collision sends the segment pair to a difference of two edges of the five point complex
    chi = poset_of_word(ALTERNATING, 3).chi
    even, odd = (((0, 1), (2, 1), (4, 1)),), (((1, 1), (3, 1), (5, 1)),)
    cycle = {(even, chi): 1, (odd, chi): -1}
    total = {}
    for i in range(5):
        merged, image = collision_map(cycle, ALTERNATING, i)
        assert merged == ((0, 1),)*5
        assert len(image) == 2
        for simplex, value in image.items():
            total[simplex] = total.get(simplex, 0) + (-1)**i*value
    assert {s: v for s, v in total.items() if v} == {}


@pytest.mark.parametrize('cycle, size', [([0, 1, 2, 3, 4], 8), ([0, 2, 4, 1, 3], 6)])
def test_five_point_cycles_under_a_collision(cycle, size):
    # the pentagon contracts to a square, the pentagram to a triangle through the double point
    encoding = graph_cycle_encoding(5)
    merged, image = collision_map(encoding.chain_from_graph_cycle(cycle), encoding.word, 0)
    assert merged == ((0, 2), (0, 1), (0, 1), (0, 1))
    assert len(image) == size
    assert chain_boundary(image) == {}
