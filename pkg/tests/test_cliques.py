import pytest

from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes, single_group_mode_count
from doodlinv.cliques.modes import FormTuple, JoinPoint, degeneration_modes, degeneration_process_count, \
    hypergraph_connected, number_of_steps
from doodlinv.errors import UnsupportedArity, ValidationError


def codes(classes) -> list:
    return sorted(c.code for c in classes)


def test_canonical_codes():
    assert CliqueClass.from_code('BBBAAA').code == 'AAABBB'
    assert CliqueClass.from_code('BABABA') == CliqueClass.from_code('ABABAB')
    assert CliqueClass.from_code('A2AA').code == 'AAA2'


def test_class_properties():
    cls = CliqueClass.from_code('A2AAA')
    assert cls.group_sizes == (5,)
    assert cls.complexity == 4
    assert cls.rho == 4
    assert cls.coincidences == 1
    assert not cls.is_configuration
    assert cls.to_dict()['codim'] == 8


def test_rejects_small_groups_and_bad_arity():
    with pytest.raises(ValidationError):
        CliqueClass.from_code('AAB')
    with pytest.raises(UnsupportedArity):
        CliqueClass.from_code('AAA', 5)
    with pytest.raises(ValidationError):
        CliqueClass.from_code('A2AAA', 4)


def test_unique_complexity_two_class():
    assert codes(enumerate_classes(3, max_complexity=2)) == ['AAA']


def test_complexity_four_configurations():
    classes = enumerate_classes(3, max_complexity=4, min_complexity=4)
    assert len(classes) == 4
    assert sorted(c.series for c in classes) == [(3, 3), (3, 3), (3, 3), (5,)]


def test_complexity_four_one_double_point():
    classes = enumerate_classes(3, max_complexity=4, min_complexity=4, max_double_points=1, exact_double_points=True)
    assert len(classes) == 5
    assert all(c.coincidences == 1 for c in classes)


def test_configurations_up_to_four():
    assert len(enumerate_classes(3, max_complexity=4)) == 6


def test_fourfold_classes_are_configurations():
    classes = enumerate_classes(4, max_complexity=4, max_double_points=2)
    assert all(c.is_configuration for c in classes)
    assert codes(enumerate_classes(4, max_complexity=3)) == ['AAAA']


def test_process_counts():
    assert degeneration_process_count(CliqueClass.from_code('AAAA')) == 16
    assert degeneration_process_count(CliqueClass.from_code('AAAABBB')) == 96


def test_mode_counts():
    assert len(degeneration_modes(CliqueClass.from_code('AAAAA'))) == 20
    for a in range(3, 7):
        cls = CliqueClass.from_code('A'*a)
        assert len(degeneration_modes(cls)) == single_group_mode_count(a)


def test_modes_start_with_a_triple():
    cls = CliqueClass.from_code('AAAA')
    modes = degeneration_modes(cls)
    assert number_of_steps(cls) == 2
    for first, second in modes:
        assert isinstance(first, FormTuple) and len(first.points) == 3
        assert isinstance(second, JoinPoint) and second.point not in first.points


def test_modes_need_configurations():
    with pytest.raises(ValidationError):
        degeneration_modes(CliqueClass.from_code('A2AAA'))


@pytest.mark.parametrize('a, edges, expected', [
    (4, [(1, 2, 3), (1, 2, 4)], True),
    (5, [(1, 2, 3), (3, 4, 5)], True),
    (6, [(1, 2, 3), (4, 5, 6)], False),
    (4, [(1, 2, 3)], False),
])
def test_hypergraph_connected(a, edges, expected):
    assert hypergraph_connected(a, edges) is expected
