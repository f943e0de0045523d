import importlib

import pytest

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.errors import AmbiguousSide, ValidationError
from doodlinv.invariants.characteristic import Evaluator, characteristic_number, moment_evaluator, \
    order_upper_test, top_symbol
from doodlinv.invariants.moments import binom_falling, moment, moments, strangeness, strangeness_jump, \
    wall_coorientation
from doodlinv.moves.moves import MOVE_KINDS, TriangleMove, find_move_sites
from doodlinv.moves.quasidoodle import DegenerationProcess, FormTriple, Quasidoodle, collapse_triangle
from doodlinv.moves.traces import random_trace


@pytest.mark.parametrize('i, beta, expected', [(1, 2, 0), (-1, 2, 1), (4, 3, 4), (0, 1, 0), (-2, 3, -4)])
def test_binom_falling(i, beta, expected):
    assert binom_falling(i, beta) == expected


def test_binom_falling_needs_positive_beta():
    with pytest.raises(ValidationError):
        binom_falling(3, 0)


def test_simple_values(circle, figure_eight):
    assert moments(circle) == {1: 0, 2: 0, 3: 0}
    assert strangeness(figure_eight) == 0
    assert moment(figure_eight, None, 2) == 0


@pytest.mark.parametrize('name', ['figure_eight', 'trefoil'])
@pytest.mark.parametrize('beta', [1, 2, 3])
def test_basepoint_independence(name, beta, request):
    d = request.getfixturevalue(name)
    assert len({moment(d, bp, beta) for bp in d.basepoints()}) == 1


@pytest.mark.parametrize('seed', range(4))
def test_basepoint_independence_on_random_diagrams(circle, seed):
    d = random_trace(circle, 8, seed=seed, kinds=('kink', 'tangency', 'triangle')).replay()
    for beta in (1, 2):
        assert len({moment(d, bp, beta) for bp in d.basepoints()}) == 1


@pytest.mark.parametrize('seed', range(4))
def test_moments_survive_tangencies(trefoil, seed):
    trace = random_trace(trefoil, 6, seed=seed, kinds=('tangency',))
    for beta in (1, 2):
        assert len({moment(d, None, beta) for d in trace.diagrams()}) == 1


def collapsed_trefoil(trefoil):
    site, = [s for s in find_move_sites(trefoil, creations=False) if isinstance(s, TriangleMove)]
    return collapse_triangle(trefoil, site.arcs)


def test_wall_crossing(trefoil):
    q, dp = collapsed_trefoil(trefoil)
    assert strangeness_jump(q) == 1
    v = q.multiple_vertices[0]
    wall = wall_coorientation(q, v)
    assert wall.positive in ('L', 'R')
    assert wall.left != wall.right
    assert wall.to_dict()['vertex'] == v
    f = moment_evaluator(1)
    assert characteristic_number(f, q, dp) == 1


def test_wall_needs_a_triple_point(trefoil):
    with pytest.raises(ValidationError):
        strangeness_jump(Quasidoodle.from_diagram(trefoil))


def test_top_symbol_of_strangeness():
    f = moment_evaluator(1)
    assert top_symbol(f, 'AAA') == 1
    with pytest.raises(ValidationError):
        top_symbol(f, 'AAAA')


def test_strangeness_has_order_two():
    f = moment_evaluator(1)
    report = order_upper_test(f, 2)
    assert report.passed
    assert set(report.table['class']) == {'AAAA'}
    assert len(report.table) == 4
    assert order_upper_test(f, 3, classes=['ABABAB']).passed
    with pytest.raises(ValidationError):
        order_upper_test(f, 2, classes=['AAA'])


def test_evaluator_memo(trefoil):
    calls = []

    def crossings(d):
        calls.append(d)
        return d.n_crossings

    f = Evaluator(crossings, order=1)
    assert f(trefoil) == 3
    assert f(trefoil.relabeled({w: w + 100 for w in trefoil.visits})) == 3
    assert len(calls) == 1
    assert f.cache_size == 1
    assert 'crossings' in repr(f)


def test_characteristic_number_of_regular_diagram(trefoil):
    f = moment_evaluator(1)
    q = Quasidoodle.from_diagram(trefoil)
    assert characteristic_number(f, q, DegenerationProcess(())) == strangeness(trefoil)
    with pytest.raises(ValidationError):
        characteristic_number(f, q, DegenerationProcess((FormTriple(0, frozenset({0, 1, 2})),)))


def test_realized_symbols_agree():
    f = moment_evaluator(1)
    report = order_upper_test(f, 1, classes=[CliqueClass.from_code('AAA')], realizations=2)
    assert set(report.table['value']) == {1}
    assert not report.passed


def test_tied_wall_sides_are_ambiguous(trefoil, monkeypatch):
    q, _ = collapsed_trefoil(trefoil)
    monkeypatch.setattr(importlib.import_module('doodlinv.invariants.moments'), 'triple_sum',
                        lambda resolved, vertices: 0)
    with pytest.raises(AmbiguousSide):
        wall_coorientation(q, q.multiple_vertices[0])


def fuzzed_diagrams(start, count: int, length: int = 8, max_crossings: int = 8) -> list:
    return [random_trace(start, length, seed=seed, kinds=MOVE_KINDS, max_crossings=max_crossings).replay()
            for seed in range(count)]


@pytest.mark.slow
def test_basepoint_independence_on_fuzzed_diagrams(circle):
    for d in fuzzed_diagrams(circle, 500):
        for beta in (1, 2, 3):
            assert len({moment(d, bp, beta) for bp in d.basepoints()}) == 1


@pytest.mark.slow
def test_tangency_invariance_on_fuzzed_diagrams(trefoil):
    for seed, d in enumerate(fuzzed_diagrams(trefoil, 500, length=4)):
        trace = random_trace(d, 4, seed=seed, kinds=('tangency',))
        for beta in (1, 2):
            assert len({moment(e, None, beta) for e in trace.diagrams()}) == 1


@pytest.mark.slow
def test_strangeness_jumps_by_one_at_many_walls(trefoil):
    walls = 0
    for d in fuzzed_diagrams(trefoil, 200, length=6):
        for site in find_move_sites(d, kinds=('triangle',), creations=False):
            q, _ = collapse_triangle(d, site.arcs)
            assert strangeness_jump(q) == 1
            walls += 1
        if walls >= 20:
            break
    assert walls >= 20


@pytest.mark.slow
def test_second_moment_has_order_three():
    f = moment_evaluator(2)
    report = order_upper_test(f, 3)
    assert set(report.table['value']) == {0}
    assert report.passed
    assert top_symbol(f, 'AAAA') != 0
