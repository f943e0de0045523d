from doodlinv.diagrams.curve_map import CurveMap, default_outer
from doodlinv.diagrams.planar_diagram import PlanarDiagram, Basepoint, FaceIndexMap, crossing_index, crossing_sign, \
    basepoint_index, face_indices, sign_from
from doodlinv.diagrams.gauss_code import parse_gauss_code, to_gauss_code, canonical_gauss_code
from doodlinv.diagrams.polyline import PolylineTrace, trace_polyline, polyline_to_map, polyline_to_diagram, \
    winding_number, read_polyline
