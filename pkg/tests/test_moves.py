import pytest

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.errors import BranchNotAdjacent, SiteVanished, ValidationError
from doodlinv.moves.merkov import merkov_candidates, merkov_search
from doodlinv.moves.moves import KinkCreation, KinkRemoval, TriangleMove, apply_move, \
    apply_with_inverse, crossing_change, event_from_dict, event_to_dict, find_move_sites, removal_sites
from doodlinv.moves.quasidoodle import DegenerationProcess, FormTriple, JoinBranch, Quasidoodle, \
    collapse_triangle, enumerate_processes, join_branch
from doodlinv.moves.realize import realize_class
from doodlinv.moves.resolution import resolve_all, resolve_last
from doodlinv.moves.traces import MoveTrace, greedy_reduce, random_trace, simplify


def triangle_site(d):
    sites = [s for s in find_move_sites(d, creations=False) if isinstance(s, TriangleMove)]
    assert len(sites) == 1
    return sites[0]


def test_circle_sites(circle):
    assert removal_sites(circle) == []
    sites = find_move_sites(circle)
    assert KinkCreation(None, 'L') in sites
    assert KinkCreation(None, 'R') in sites
    with pytest.raises(SiteVanished):
        apply_move(circle, KinkRemoval(0))


def test_figure_eight_kinks(figure_eight):
    sites = removal_sites(figure_eight)
    assert len(sites) == 2
    assert all(isinstance(s, KinkRemoval) for s in sites)
    for s in sites:
        assert apply_move(figure_eight, s).is_circle


def test_trefoil_sites(trefoil):
    sites = find_move_sites(trefoil, creations=False)
    assert sum(isinstance(s, TriangleMove) for s in sites) == 1
    assert not any(isinstance(s, KinkRemoval) for s in sites)
    moved = apply_move(trefoil, triangle_site(trefoil))
    assert moved.n_crossings == 3
    assert not moved.is_isomorphic(trefoil)


@pytest.mark.parametrize('name', ['circle', 'figure_eight', 'trefoil'])
def test_crossing_change_and_inverse(name, request):
    d = request.getfixturevalue(name)
    for site in find_move_sites(d):
        after, inverse = apply_with_inverse(d, site)
        assert after.n_crossings == d.n_crossings + crossing_change(site)
        assert apply_move(after, inverse).is_isomorphic(d)


def test_event_dicts(trefoil):
    for site in find_move_sites(trefoil):
        assert event_from_dict(event_to_dict(site)) == site
    with pytest.raises(ValidationError):
        event_from_dict({'kind': 'swirl'})
    with pytest.raises(ValidationError):
        event_from_dict({'kind': 'kink-', 'arcs': [1, 2]})


def test_random_trace(trefoil):
    assert len(random_trace(trefoil, 0)) == 0
    first = random_trace(trefoil, 6, seed=3)
    second = random_trace(trefoil, 6, seed=3)
    assert first.events == second.events
    assert first.crossing_counts() == [d.n_crossings for d in first.diagrams()]
    with pytest.raises(ValidationError):
        random_trace(trefoil, -1)


def test_random_trace_respects_crossing_bound(circle):
    trace = random_trace(circle, 15, seed=11, kinds=('kink', 'tangency', 'triangle'), max_crossings=4)
    assert max(trace.crossing_counts()) <= 4


def test_trace_dict(trefoil):
    trace = random_trace(trefoil, 5, seed=2, kinds=('kink', 'tangency', 'triangle'))
    again = MoveTrace.from_dict(trace.to_dict())
    assert again.events == trace.events
    assert again.replay().is_isomorphic(trace.replay())
    with pytest.raises(ValidationError):
        MoveTrace.from_dict({'events': []})


@pytest.mark.parametrize('seed', range(5))
def test_kink_traces_reduce_to_circle(circle, seed):
    trace = random_trace(circle, 8, seed=seed, kinds=('kink',))
    reduced, events = greedy_reduce(trace.replay())
    assert reduced.is_circle
    assert all(isinstance(e, KinkRemoval) for e in events)


def test_greedy_reduce_trefoil(trefoil):
    reduced, events = greedy_reduce(trefoil)
    assert reduced.is_circle
    assert [crossing_change(e) for e in events] == [-2, -1]
    assert MoveTrace(trefoil, events).replay().is_circle


def test_simplify(figure_eight, trefoil):
    result = simplify(figure_eight, budget=10)
    assert result.reached_circle
    assert result.attempts == 0
    assert result.to_dict()['crossings'] == 0
    assert simplify(trefoil, budget=10, seed=1).reached_circle


# ----- quasidoodles -----
def test_collapse_triangle(trefoil):
    site = triangle_site(trefoil)
    q, dp = collapse_triangle(trefoil, site.arcs)
    assert q.complexity == 2
    assert len(q.multiple_vertices) == 1
    assert q.multiplicity(q.multiple_vertices[0]) == 3
    dp.check(q)
    plus, minus = resolve_last(q, dp)
    assert plus.complexity == minus.complexity == 0
    moved = apply_move(trefoil, site)
    assert {plus.canonical_key, minus.canonical_key} == {trefoil.canonical_key, moved.canonical_key}
    assert resolve_all(q).complexity == 0


def test_quasidoodle_rejects_diagram_without_process(trefoil):
    q = Quasidoodle.from_diagram(trefoil)
    assert q.complexity == 0
    assert q.to_diagram().is_isomorphic(trefoil)
    with pytest.raises(ValidationError):
        resolve_last(q, DegenerationProcess(()))
    with pytest.raises(ValidationError):
        Quasidoodle(trefoil, basepoint=999)


def test_realize_quadruple_point():
    realization = realize_class(CliqueClass.from_code('AAAA'))
    q = realization.quasidoodle
    assert q.complexity == 3
    assert len(enumerate_processes(q)) == 16
    for dp in realization.processes():
        dp.check(q)
        plus, minus = resolve_last(q, dp)
        assert plus.complexity == minus.complexity == 2
    v = realization.centers[0]
    with pytest.raises(BranchNotAdjacent):
        join_branch(q, v, 10**6)


def test_realize_rejects_non_configurations():
    with pytest.raises(ValidationError):
        realize_class(CliqueClass.from_code('A2AA'))


def test_process_validation():
    step = FormTriple(0, frozenset({1, 2, 3}))
    dp = DegenerationProcess((step, JoinBranch(0, 4)), ('+', '-'))
    assert DegenerationProcess.from_dict(dp.to_dict()) == dp
    assert dp.without_last() == DegenerationProcess((step,), ('+',))
    with pytest.raises(ValidationError):
        DegenerationProcess((step,), ('x',))
    with pytest.raises(ValidationError):
        DegenerationProcess((step,), ('+', '+'))
    with pytest.raises(ValidationError):
        DegenerationProcess.from_dict({'steps': [{'step': 'twist', 'vertex': 0}]})


def test_merkov_candidates():
    candidates = merkov_candidates()
    assert [sides for sides, _ in candidates] == [('+', '+'), ('+', '-'), ('-', '+'), ('-', '-')]
    assert all(d.n_crossings >= 1 for _, d in candidates)


@pytest.mark.slow
def test_merkov_search_keeps_one_candidate():
    with pytest.warns(RuntimeWarning):
        table = merkov_search(seed=1)
    assert table['reached_circle'].sum() >= 3
    assert table['simplified_crossings'].max() >= 6
