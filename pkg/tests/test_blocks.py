from itertools import combinations

import pytest

from doodlinv.blocks.block import block, block_top_homology, wang_rank_check
from doodlinv.blocks.census import census
from doodlinv.blocks.column import auxiliary_column, column_classes, column_complex, column_of_classes, face_classes, \
    is_locally_closed
from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.errors import UnsupportedArity, ValidationError
from doodlinv.homology.chain_homology import GroupPresentation

Z = GroupPresentation(1)


def nonzero_groups(report) -> list:
    return sorted(str(g) for g in report.groups.values() if not g.is_zero)


def test_cross_block_descriptor():
    b = block(CliqueClass.from_code('AAAA'))
    assert b.eps_base == -1
    assert b.rho == 4
    assert b.fiber_top == 1


def test_five_star_base_is_orientable():
    assert block(CliqueClass.from_code('AAAAA', 4)).eps_base == 1


def test_cross_block_groups():
    h = block_top_homology(block(CliqueClass.from_code('AAAA')))
    assert h.top == Z
    assert h.second == Z
    assert h.top_degree == 4 + 1 - 6


def test_five_configuration_block():
    assert block_top_homology(block(CliqueClass.from_code('AAAAA'))).top == GroupPresentation(2)


@pytest.mark.parametrize('code', ['AAABBB', 'AABABB', 'ABABAB'])
def test_two_triple_blocks(code):
    assert block_top_homology(block(CliqueClass.from_code(code))).top == Z


@pytest.mark.parametrize('ring, expected', [(0, 0), (2, 1), (5, 0)])
def test_fourfold_cross_block(ring, expected):
    h = block_top_homology(block(CliqueClass.from_code('AAAA', 4)), ring)
    assert h.top.free_rank == expected
    assert not h.top.torsion


@pytest.mark.parametrize('code', ['AAA', 'AAAA', 'AAAAA', 'AAABBB', 'ABABAB'])
def test_wang_ranks_balance(code):
    assert wang_rank_check(block(CliqueClass.from_code(code)))


def test_column_classes():
    assert [c.code for c in column_classes(3, context='idoodle')] == ['AAAA']
    with pytest.raises(UnsupportedArity):
        column_classes(3, 3, 'fourfold')
    with pytest.raises(ValidationError):
        column_classes(3, 3, 'knots')


@pytest.mark.parametrize('p', [2, 3])
def test_doodle_columns(p):
    report = auxiliary_column(p)
    assert nonzero_groups(report) == ['Z', 'Z']
    assert report.to_dict()['p'] == p
    column_complex(column_classes(p)).check()


def test_column_report_frame():
    report = auxiliary_column(2)
    frame = report.to_frame()
    assert list(frame.columns) == ['degree', 'group', 'free_rank', 'torsion']
    assert 'AAA' in report.block_groups


def test_doodle_column_limit():
    with pytest.raises(ValidationError):
        auxiliary_column(6)
    with pytest.raises(UnsupportedArity):
        auxiliary_column(5)
    with pytest.raises(UnsupportedArity):
        auxiliary_column(4, max_double_points=2)


def nonzero(groups: dict) -> dict:
    return {d: g for d, g in groups.items() if not g.is_zero}


UPPER_THREE = ['AAAA', 'AAA2', 'AA3']


def test_upper_blocks_of_column_three():
    # the lower d1 from the cross block into the star block is twice a generator
    assert nonzero(column_of_classes(UPPER_THREE)) == {-3: GroupPresentation(0, (2,))}
    for ring in (3, 5):
        assert nonzero(column_of_classes(UPPER_THREE, ring=ring)) == {}


def test_column_three_is_carried_by_the_double_double_block():
    assert nonzero(column_of_classes(['A2A2'])) == {-3: Z, -4: Z}
    full = [c.code for c in column_classes(3)]
    assert sorted(full) == sorted(['A2A2'] + UPPER_THREE)
    assert nonzero(column_of_classes(full)) == {-3: Z, -4: Z}
    assert nonzero(column_of_classes(full, ring=3)) == nonzero(column_of_classes(['A2A2'], ring=3))


def test_non_closed_union_is_rejected():
    codes = ['AAAA2', 'AAAB2B', 'AAABBB']
    assert not is_locally_closed([CliqueClass.from_code(c) for c in codes])
    with pytest.raises(ValidationError):
        column_of_classes(codes)


def test_alternating_triples_with_mixed_limits():
    classes = [CliqueClass.from_code(c) for c in ('AAAA2', 'AAAAA', 'ABABAB')]
    assert is_locally_closed(classes)
    complex_ = column_complex(classes)
    complex_.check()
    kinds = {cell[0] for cells in complex_.cells.values() for cell in cells}
    assert {'ms', 'mt'} <= kinds


def free_rank(groups: dict, degree: int) -> int:
    return groups.get(degree, GroupPresentation()).free_rank


def top_survives_d1(code: str) -> int:
    """Change of the free rank of H_-1 when a top class is added over its faces in column 4."""
    column = set(column_classes(4))
    lower = [c.code for c in face_classes(CliqueClass.from_code(code)) if c in column]
    return free_rank(column_of_classes([code] + lower), -1) - free_rank(column_of_classes(lower), -1)


@pytest.mark.slow
@pytest.mark.parametrize('code, expected', [('ABABAB', 1), ('AAABBB', 0), ('AABABB', 0)])
def test_two_triple_chains_under_d1(code, expected):
    assert top_survives_d1(code) == expected


@pytest.mark.slow
def test_five_point_cycles_have_boundary():
    assert free_rank(column_of_classes(['AAAAA', 'AAAA2']), -1) == 0


@pytest.mark.slow
def test_every_closed_union_of_column_four_is_a_complex():
    classes = column_classes(4)
    for r in range(1, len(classes) + 1):
        for subset in combinations(classes, r):
            if is_locally_closed(subset):
                column_complex(subset).check()
            else:
                with pytest.raises(ValidationError):
                    column_complex(subset)


def test_one_double_five_block():
    assert block_top_homology(block(CliqueClass.from_code('AAAA2'))).top == GroupPresentation(3)


@pytest.mark.parametrize('ring, counts', [(0, (0, 0, 2)), (2, (1, 0, 2)), (5, (0, 1, 2))])
def test_fourfold_census(ring, counts):
    with pytest.warns(RuntimeWarning):
        report = census('fourfold', ring=ring, min_order=3)
    assert report.counts == counts
    assert report.assumptions


@pytest.mark.slow
def test_doodle_order_four_column():
    report = auxiliary_column(4)
    assert report.group(-1) == Z
    assert report.top_degree == -1
    assert len(report.generators) == 1


@pytest.mark.slow
def test_doodle_census():
    with pytest.warns(RuntimeWarning):
        report = census('doodle')
    assert report.counts == (0, 0, 0, 1)


@pytest.mark.slow
def test_idoodle_census():
    with pytest.warns(RuntimeWarning):
        report = census('idoodle')
    assert report.counts == (0, 1, 1, 5)
