import pytest

from doodlinv.diagrams.gauss_code import parse_gauss_code
from doodlinv.diagrams.planar_diagram import PlanarDiagram

FIGURE_EIGHT = '1 1 ; 1:+'
TREFOIL = '1 2 3 1 2 3 ; 1:+ 2:- 3:+'


@pytest.fixture
def circle():
    return PlanarDiagram.circle()


@pytest.fixture
def figure_eight():
    return parse_gauss_code(FIGURE_EIGHT)


@pytest.fixture
def trefoil():
    return parse_gauss_code(TREFOIL)


@pytest.fixture
def bowtie_points():
    return [(0, 0), (2, 2), (2, 0), (0, 2)]
