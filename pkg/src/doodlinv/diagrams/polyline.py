"""
Ingestion of closed polylines.

Candidate segment pairs come from a shapely STRtree built on float copies of the segments; every predicate is then
decided exactly on Fraction coordinates, so results do not depend on floating point rounding.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import json

import numpy as np
import shapely
from shapely import STRtree

from doodlinv.diagrams.curve_map import CurveMap
from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.errors import NonGeneric, ValidationError


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        return Fraction(repr(float(x)))
    return Fraction(str(x))


def as_points(points) -> list:
    """Fraction points with the closing duplicate removed."""
    out = [(as_fraction(x), as_fraction(y)) for x, y in points]
    if len(out) > 1 and out[0] == out[-1]:
        out = out[:-1]
    if len(out) < 3:
        raise ValidationError(f'a closed polyline needs at least 3 distinct points, got {len(out)}')
    for i, p in enumerate(out):
        if p == out[(i + 1) % len(out)]:
            raise ValidationError(f'consecutive points {i} and {(i + 1) % len(out)} coincide')
    return out


def sub(a, b) -> tuple:
    return a[0] - b[0], a[1] - b[1]


def cross(a, b):
    return a[0]*b[1] - a[1]*b[0]


def dot(a, b):
    return a[0]*b[0] + a[1]*b[1]


def pseudo_angle(v) -> Fraction:
    """Exact monotone stand-in for the counterclockwise angle of v, with values in [0, 4)."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if y >= 0:
        return y/(x + y) if x >= 0 else 1 - x/(-x + y)
    return 2 + (-y)/(-x - y) if x < 0 else 3 + x/(x - y)


def relative_angle(base, v) -> Fraction:
    return (pseudo_angle(v) - pseudo_angle(base)) % 4


def point_segment_distance2(p, a, b) -> Fraction:
    ab = sub(b, a)
    t = dot(sub(p, a), ab)/dot(ab, ab)
    t = min(max(t, Fraction(0)), Fraction(1))
    closest = (a[0] + t*ab[0], a[1] + t*ab[1])
    d = sub(p, closest)
    return dot(d, d)


@dataclass
class PolylineTrace:
    """
    Result of tracing a polyline.

    Attributes
    ----------
    curve_map: CurveMap of the polyline
    points: Fraction points
    segment_visits: segment -> list of (parameter, visit label) sorted along the segment
    vertex_points: vertex id -> intersection point
    basepoint: tail label of the arc containing points[0] (None without crossings)
    """
    curve_map: CurveMap
    points: list
    segment_visits: dict = field(default_factory=dict)
    vertex_points: dict = field(default_factory=dict)
    basepoint: int = None

    def arc_at(self, segment: int, t) -> int:
        """Tail label of the arc containing the point at parameter t of a segment (not at a vertex)."""
        m = len(self.points)
        for step in range(m + 1):
            s = (segment - step) % m
            visits = [label for u, label in self.segment_visits.get(s, []) if step > 0 or u < t]
            if visits:
                return visits[-1]
        return None

    def visit_at(self, segment: int, point) -> int:
        a, b = self.points[segment], self.points[(segment + 1) % len(self.points)]
        r = sub(b, a)
        t = dot(sub(point, a), r)/dot(r, r)
        for u, label in self.segment_visits.get(segment, []):
            if u == t:
                return label
        raise ValidationError(f'segment {segment} has no visit at {point}')


def _segment_pairs(points, eps: Fraction) -> list:
    m = len(points)
    lines = [shapely.LineString([tuple(map(float, points[i])), tuple(map(float, points[(i + 1) % m]))])
             for i in range(m)]
    tree = STRtree(lines)
    buffered = shapely.buffer(np.array(lines, dtype=object), float(eps) + 1e-9)
    inputs, hits = tree.query(buffered, predicate='intersects')
    return sorted({(int(i), int(j)) for i, j in zip(inputs, hits) if i < j})


def _intersect(points, i: int, j: int, eps: Fraction):
    """Crossing point of segments i and j, or None; raises NonGeneric on degenerate contact."""
    m = len(points)
    p, p2 = points[i], points[(i + 1) % m]
    q, q2 = points[j], points[(j + 1) % m]
    adjacent = j == i + 1 or (i == 0 and j == m - 1)
    r, s = sub(p2, p), sub(q2, q)
    denom = cross(r, s)
    if denom == 0:
        if cross(sub(q, p), r) != 0:
            return None
        rr = dot(r, r)
        t0, t1 = sorted((dot(sub(q, p), r)/rr, dot(sub(q2, p), r)/rr))
        low, high = max(t0, Fraction(0)), min(t1, Fraction(1))
        if low < high:
            raise NonGeneric(f'segments {i} and {j} overlap')
        if low == high and not adjacent:
            raise NonGeneric(f'segments {i} and {j} touch at an end point')
        return None
    if adjacent:
        return None
    t = cross(sub(q, p), s)/denom
    u = cross(sub(q, p), r)/denom
    if not (0 <= t <= 1 and 0 <= u <= 1):
        for a in (q, q2):
            if point_segment_distance2(a, p, p2) < eps*eps:
                raise NonGeneric(f'polyline vertex {a} lies within eps of segment {i}')
        for a in (p, p2):
            if point_segment_distance2(a, q, q2) < eps*eps:
                raise NonGeneric(f'polyline vertex {a} lies within eps of segment {j}')
        return None
    if t in (0, 1) or u in (0, 1):
        raise NonGeneric(f'segments {i} and {j} meet at a polyline vertex')
    x = (p[0] + t*r[0], p[1] + t*r[1])
    for a in (p, p2, q, q2):
        d = sub(x, a)
        if dot(d, d) < eps*eps:
            raise NonGeneric(f'the crossing of segments {i} and {j} lies within eps of a polyline vertex')
    return x


def _parameter(points, segment: int, x) -> Fraction:
    a, b = points[segment], points[(segment + 1) % len(points)]
    r = sub(b, a)
    return dot(sub(x, a), r)/dot(r, r)


def trace_polyline(points, eps=Fraction(1, 10**6), allow_multiple: bool = False) -> PolylineTrace:
    """
    Parameters
    ----------
    points - sequence of (x, y), ints, decimals, strings or Fractions; the polyline is closed
    eps - rejection tolerance for near-degenerate contacts
    allow_multiple - keep exactly concurrent segments as one multiple point instead of rejecting them

    Returns
    -------
    PolylineTrace
    """
    points = as_points(points)
    eps = as_fraction(eps)
    m = len(points)
    meeting = {}
    for i, j in _segment_pairs(points, eps):
        x = _intersect(points, i, j, eps)
        if x is not None:
            meeting.setdefault(x, set()).update({i, j})
    for x, segments in meeting.items():
        if len(segments) > 2 and not allow_multiple:
            raise NonGeneric(f'{len(segments)} segments meet at {x}')
    crossing_points = sorted(meeting)
    for a_index, a in enumerate(crossing_points):
        for b in crossing_points[a_index + 1:]:
            if b[0] - a[0] >= eps:
                break
            d = sub(a, b)
            if dot(d, d) < eps*eps and meeting[a] & meeting[b]:
                raise NonGeneric(f'three segments meet within eps near {a}')
    per_segment = {}
    for x, segments in meeting.items():
        for s in segments:
            per_segment.setdefault(s, []).append((_parameter(points, s, x), x))
    segment_visits, vertex_of, point_vertex, directions = {}, {}, {}, {}
    visits = []
    for s in range(m):
        rows = []
        for t, x in sorted(per_segment.get(s, [])):
            label = len(visits)
            visits.append(label)
            vertex = point_vertex.setdefault(x, len(point_vertex))
            vertex_of[label] = vertex
            r = sub(points[(s + 1) % m], points[s])
            directions[(label, 1)] = r
            directions[(label, -1)] = (-r[0], -r[1])
            rows.append((t, label))
        if rows:
            segment_visits[s] = rows
    rotation = {}
    for label in visits:
        rotation.setdefault(vertex_of[label], []).extend([(label, 1), (label, -1)])
    rotation = {v: tuple(sorted(hs, key=lambda h: pseudo_angle(directions[h]))) for v, hs in rotation.items()}
    trace = PolylineTrace(None, points, segment_visits, {v: x for x, v in point_vertex.items()})
    k = min(range(m), key=lambda i: points[i])
    back, ahead = sub(points[k - 1], points[k]), sub(points[(k + 1) % m], points[k])
    west = (Fraction(-1), Fraction(0))
    side = 'L' if 0 < relative_angle(ahead, west) < relative_angle(ahead, back) else 'R'
    outer_label = trace.arc_at((k - 1) % m, Fraction(2))
    trace.basepoint = trace.arc_at((m - 1) % m, Fraction(2))
    trace.curve_map = CurveMap(visits, vertex_of, rotation, (outer_label, side))
    return trace


def polyline_to_map(points, eps=Fraction(1, 10**6), allow_multiple: bool = True) -> CurveMap:
    return trace_polyline(points, eps, allow_multiple).curve_map


def polyline_to_diagram(points, eps=Fraction(1, 10**6)) -> PlanarDiagram:
    """Diagram of a generic closed polyline; NonGeneric on triple points, overlaps or near-vertex crossings."""
    return PlanarDiagram.from_map(trace_polyline(points, eps, allow_multiple=False).curve_map)


def winding_number(points, q) -> int:
    """Exact winding number of the closed polyline around q; NonGeneric if q lies on the curve."""
    points = as_points(points)
    q = (as_fraction(q[0]), as_fraction(q[1]))
    m = len(points)
    wn = 0
    for i in range(m):
        a, b = points[i], points[(i + 1) % m]
        side = cross(sub(b, a), sub(q, a))
        if side == 0 and point_segment_distance2(q, a, b) == 0:
            raise NonGeneric(f'point {q} lies on segment {i}')
        if a[1] <= q[1] < b[1] and side > 0:
            wn += 1
        elif b[1] <= q[1] < a[1] and side < 0:
            wn -= 1
    return wn


def read_polyline(text: str) -> list:
    """Polyline JSON: an array of [x, y] pairs; numbers may be given as strings for exact decimals."""
    data = json.loads(text)
    if not isinstance(data, list) or any(len(p) != 2 for p in data):
        raise ValidationError('a polyline is a JSON array of [x, y] pairs')
    return [(as_fraction(x), as_fraction(y)) for x, y in data]
