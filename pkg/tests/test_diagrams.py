from fractions import Fraction
import json
from pathlib import Path
from random import Random

import pytest

from doodlinv.diagrams.gauss_code import canonical_gauss_code, parse_gauss_code, to_gauss_code
from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.diagrams.polyline import polyline_to_diagram, read_polyline, winding_number
from doodlinv.errors import DuplicateVisit, MissingVisit, NonGeneric, UnknownCrossing, UnrealizableCode, \
    ValidationError
from doodlinv.moves.traces import random_trace


def test_circle(circle):
    assert circle.n_crossings == 0
    assert circle.is_circle
    assert len(circle.faces) == 2
    assert circle.face_indices().multiset() == [0, 1]


def test_figure_eight_faces(figure_eight):
    assert figure_eight.n_crossings == 1
    assert figure_eight.face_indices().multiset() == [-1, 0, 1]
    assert figure_eight.crossing_index(figure_eight.crossings[0]) == 0


def test_figure_eight_basepoint_indices(figure_eight):
    assert sorted(figure_eight.basepoint_index(bp) for bp in figure_eight.basepoints()) == [0, 1]


def test_trefoil_faces(trefoil):
    assert len(trefoil.faces) == 5
    assert sorted(abs(i) for i in trefoil.face_indices().multiset()) == [0, 1, 1, 1, 2]
    assert sorted(len(face) for face in trefoil.faces) == [2, 2, 2, 3, 3]
    assert {abs(trefoil.crossing_index(x)) for x in trefoil.crossings} == {1}


def test_long_form(figure_eight):
    d = parse_gauss_code('# a comment\ngauss: 1 1\nchirality: 1=+1\n')
    assert d.is_isomorphic(figure_eight)


def test_gauss_code_round_trip(trefoil):
    assert parse_gauss_code(to_gauss_code(trefoil)).is_isomorphic(trefoil)
    assert parse_gauss_code(to_gauss_code(trefoil, compact=True)).is_isomorphic(trefoil)
    assert canonical_gauss_code(trefoil.relabeled({w: w + 10 for w in trefoil.visits})) == canonical_gauss_code(trefoil)


def test_dict_round_trip(trefoil):
    assert PlanarDiagram.from_dict(json.loads(json.dumps(trefoil.to_json()))).is_isomorphic(trefoil)


@pytest.mark.parametrize('text, error', [
    ('1 1 2 ; 1:+ 2:+', MissingVisit),
    ('1 1 1 ; 1:+', DuplicateVisit),
    ('1 1 ; 1:+ 2:-', UnknownCrossing),
    ('1 2 1 2 ; 1:+ 2:+', UnrealizableCode),
    ('1 2 1 2 ; 1:+ 2:-', UnrealizableCode),
    ('1 1 ; 1:+ ; 5L', ValidationError),
    ('1 1 ; 1:x', ValidationError),
    ('1 1', MissingVisit),
])
def test_bad_codes(text, error):
    with pytest.raises(error):
        parse_gauss_code(text)


def test_reverse_negates_indices(trefoil):
    negated = sorted(-i for i in trefoil.face_indices().multiset())
    assert trefoil.reverse().face_indices().multiset() == negated
    assert trefoil.mirror().face_indices().multiset() == negated


def test_sphere_condition_on_random_diagrams(circle):
    for seed in range(20):
        for d in random_trace(circle, 8, seed).diagrams():
            assert len(d.faces) == d.n_crossings + 2


def test_bowtie(bowtie_points):
    d = polyline_to_diagram(bowtie_points)
    assert d.n_crossings == 1
    assert d.face_indices().multiset() == [-1, 0, 1]
    assert winding_number(bowtie_points, (Fraction(17, 10), 1)) == -1
    assert winding_number(bowtie_points, (Fraction(3, 10), 1)) == 1
    assert winding_number(bowtie_points, (5, 5)) == 0


def test_square():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert polyline_to_diagram(square).is_circle
    assert winding_number(square, (Fraction(1, 2), Fraction(1, 2))) == 1


def probe_windings(points) -> set:
    out = set()
    for x in range(40):
        for y in range(0, 160, 7):
            try:
                out.add(winding_number(points, (Fraction(2*x + 1, 2), Fraction(2*y + 1, 4))))
            except NonGeneric:
                pass
    return out


def test_random_polylines_match_winding_numbers():
    rng = Random(7)
    checked = 0
    while checked < 25:
        points = [(rng.randint(0, 40), rng.randint(0, 40)) for _ in range(6)]
        try:
            d = polyline_to_diagram(points)
        except ValidationError:
            continue
        faces = d.face_indices()
        assert faces[faces.outer] == 0
        assert len(d.faces) == d.n_crossings + 2
        assert probe_windings(points) <= set(faces.multiset())
        checked += 1



def test_vertex_on_segment_is_not_generic():
    with pytest.raises(NonGeneric):
        polyline_to_diagram([(0, 0), (4, 0), (4, 2), (2, 0), (0, 2)])


def test_read_polyline():
    points = read_polyline('[[0, 0], ["2.5", 1], [1, 3]]')
    assert points[1] == (Fraction(5, 2), Fraction(1))
    with pytest.raises(ValidationError):
        read_polyline('{"x": 1}')


MERKOV_CURVE = Path(__file__).parent/'data'/'merkov_curve.json'


def test_merkov_curve_round_trip():
    # four petals on a square, the inner arcs crossing pairwise and the branches crossing at the corners
    d = polyline_to_diagram(read_polyline(MERKOV_CURVE.read_text()))
    assert d.n_crossings == 8
    again = parse_gauss_code(to_gauss_code(d))
    assert again.is_isomorphic(d)
    assert canonical_gauss_code(again) == canonical_gauss_code(d)
