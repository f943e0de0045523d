"""
Rotation-system maps of one oriented closed curve on the oriented plane.

A map is a cyclic sequence of visit labels (the order in which the curve passes through its vertices), the vertex
of each visit, the counterclockwise cyclic order of half-edges at every vertex and a dart on the unbounded face.
Arc i runs from visits[i] to visits[i + 1] and is named by its tail visit. Half-edge (w, +1) is the ray along which
the curve leaves visit w, (w, -1) the ray along which it arrives. Dart (i, +1) runs along arc i and has the face
left of the arc on its left; dart (i, -1) runs backwards and has the face right of the arc on its left.

The crossing-free circle has no visits, one arc (index 0, tail None) and two faces.
"""
from fractions import Fraction
from functools import cached_property

import networkx as nx

from doodlinv.errors import InternalInconsistency, UnrealizableCode, ValidationError

SIDES = {1: 'L', -1: 'R'}
SIGNS = {'L': 1, 'R': -1}


def flip(side: str) -> str:
    return 'R' if side == 'L' else 'L'


def cyclic_min(seq) -> tuple:
    """The rotation of a cyclic sequence starting at its smallest element."""
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def as_number(value: Fraction):
    return int(value) if value.denominator == 1 else value


class CurveMap:
    """
    A planar map of one closed curve, possibly with multiple points.

    Attributes
    ----------
    visits: tuple of distinct int visit labels in curve order
    vertex_of: dict visit label -> vertex id
    rotation: dict vertex id -> tuple of half-edges (visit, +1 | -1) in counterclockwise order
    outer: (tail label of an arc, 'L' | 'R'), a dart on the unbounded face; (None, side) for the circle

    Properties
    ----------
    faces: tuple of faces, each a tuple of darts in boundary order
    face_of: dart -> face number
    face_index: face number -> index (winding number), outer face 0
    complexity: sum of (m - 1) over vertices with m >= 3 branches
    canonical_key: a hashable form equal for maps differing by relabeling and base shift
    """
    def __init__(self, visits, vertex_of: dict, rotation: dict, outer: tuple, check: bool = True):
        self.visits = tuple(visits)
        self.vertex_of = dict(vertex_of)
        self.rotation = {v: tuple(r) for v, r in rotation.items()}
        self.outer = (outer[0], outer[1])
        if check:
            self.validate()

    # ----- structure -----
    @cached_property
    def position(self) -> dict:
        return {w: i for i, w in enumerate(self.visits)}

    @property
    def n_visits(self) -> int:
        return len(self.visits)

    @property
    def is_circle(self) -> bool:
        return not self.visits

    @cached_property
    def vertices(self) -> tuple:
        """Vertex ids in order of their first visit."""
        seen = {}
        for w in self.visits:
            seen.setdefault(self.vertex_of[w], None)
        return tuple(seen)

    @cached_property
    def visits_at(self) -> dict:
        out = {v: [] for v in self.vertices}
        for w in self.visits:
            out[self.vertex_of[w]].append(w)
        return {v: tuple(ws) for v, ws in out.items()}

    def multiplicity(self, v) -> int:
        return len(self.rotation[v])//2

    @property
    def multiple_vertices(self) -> tuple:
        return tuple(v for v in self.vertices if self.multiplicity(v) >= 3)

    @property
    def complexity(self) -> int:
        return sum(self.multiplicity(v) - 1 for v in self.multiple_vertices)

    @cached_property
    def _slot(self) -> dict:
        """half-edge -> (vertex, index in the rotation)."""
        return {h: (v, i) for v, r in self.rotation.items() for i, h in enumerate(r)}

    def validate(self) -> None:
        if len(set(self.visits)) != len(self.visits):
            raise ValidationError('visit labels must be distinct')
        if set(self.vertex_of) != set(self.visits):
            raise ValidationError('every visit needs a vertex and every vertex entry a visit')
        expected = {}
        for w in self.visits:
            expected.setdefault(self.vertex_of[w], set()).update({(w, 1), (w, -1)})
        if set(expected) != set(self.rotation):
            raise ValidationError('rotation vertices do not match the visited vertices')
        for v, r in self.rotation.items():
            if set(r) != expected[v] or len(r) != len(expected[v]):
                raise ValidationError(f'rotation at vertex {v} does not list exactly its half-edges')
            if len(r) < 4:
                raise ValidationError(f'vertex {v} is visited once; every vertex needs two or more visits')
        if self.outer[1] not in SIGNS:
            raise ValidationError(f'outer side must be L or R, got {self.outer[1]!r}')
        if self.visits and self.outer[0] not in self.position:
            raise ValidationError(f'outer dart {self.outer} is not on an arc of the map')
        if self.visits and len(self.vertices) - self.n_visits + len(self.faces) != 2:
            raise UnrealizableCode(
                f'rotation data gives V - E + F = {len(self.vertices) - self.n_visits + len(self.faces)}, not 2'
            )
        if self.visits:
            self.face_index

    # ----- darts and faces -----
    def leaving_dart(self, half_edge: tuple) -> tuple:
        """The dart that leaves the vertex along a half-edge."""
        w, s = half_edge
        j = self.position[w]
        return (j, 1) if s == 1 else ((j - 1) % self.n_visits, -1)

    def next_dart(self, dart: tuple) -> tuple:
        """Next dart on the boundary of the face left of dart."""
        i, s = dart
        n = self.n_visits
        arriving = (self.visits[(i + 1) % n], -1) if s == 1 else (self.visits[i], 1)
        v, idx = self._slot[arriving]
        r = self.rotation[v]
        return self.leaving_dart(r[(idx - 1) % len(r)])

    @staticmethod
    def dart_key(dart: tuple) -> tuple:
        return dart[0], SIDES[dart[1]]

    @cached_property
    def faces(self) -> tuple:
        if self.is_circle:
            return ((0, 1),), ((0, -1),)
        seen, faces = set(), []
        for i in range(self.n_visits):
            for s in (1, -1):
                if (i, s) in seen:
                    continue
                face, dart = [], (i, s)
                while dart not in seen:
                    seen.add(dart)
                    face.append(dart)
                    dart = self.next_dart(dart)
                if dart != (i, s):
                    raise InternalInconsistency(f'face tracing from dart {(i, s)} did not close')
                faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def face_of(self) -> dict:
        return {dart: f for f, face in enumerate(self.faces) for dart in face}

    def face_key(self, f: int) -> tuple:
        """Smallest (arc index, side) among the darts of a face."""
        return min(self.dart_key(d) for d in self.faces[f])

    def left_face(self, i: int) -> int:
        return self.face_of[(i, 1)]

    def right_face(self, i: int) -> int:
        return self.face_of[(i, -1)]

    def arc_index(self, label) -> int:
        return 0 if label is None else self.position[label]

    def dart_of(self, label, side: str) -> tuple:
        return self.arc_index(label), SIGNS[side]

    @cached_property
    def outer_face(self) -> int:
        return self.face_of[self.dart_of(*self.outer)]

    @cached_property
    def face_index(self) -> dict:
        """Face number -> winding number; outer face 0, left of every arc one more than right."""
        n_arcs = max(self.n_visits, 1)
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.faces)))
        step = {}
        for i in range(n_arcs):
            left, right = self.left_face(i), self.right_face(i)
            if left == right:
                raise UnrealizableCode(f'arc {i} has the same face on both sides')
            graph.add_edge(left, right)
            step[(right, left)], step[(left, right)] = 1, -1
        index = {self.outer_face: 0}
        for u, v in nx.bfs_edges(graph, self.outer_face):
            index[v] = index[u] + step[(u, v)]
        if len(index) != len(self.faces):
            raise UnrealizableCode('the dual graph is not connected')
        for i in range(n_arcs):
            if index[self.left_face(i)] != index[self.right_face(i)] + 1:
                raise UnrealizableCode(f'face indices are inconsistent across arc {i}')
        return index

    def sector_faces(self, v) -> tuple:
        """Faces around a vertex, counterclockwise, the j-th lying between rotation[v][j] and rotation[v][j + 1]."""
        return tuple(self.face_of[self.leaving_dart(h)] for h in self.rotation[v])

    def vertex_index(self, v):
        """Mean of the indices of the faces around a vertex (int when integral)."""
        faces = self.sector_faces(v)
        return as_number(Fraction(sum(self.face_index[f] for f in faces), len(faces)))

    def dart_label(self, dart: tuple) -> tuple:
        i, s = dart
        return (self.visits[i] if self.visits else None), SIDES[s]

    # ----- canonical form -----
    def _shifted_form(self, shift: int) -> tuple:
        n = self.n_visits
        order = self.visits[shift:] + self.visits[:shift]
        new_label = {w: t for t, w in enumerate(order)}
        new_vertex = {}
        for w in order:
            new_vertex.setdefault(self.vertex_of[w], len(new_vertex))
        sequence = tuple(new_vertex[self.vertex_of[w]] for w in order)
        rotations = tuple(
            cyclic_min((new_label[w], s) for w, s in self.rotation[v])
            for v in sorted(new_vertex, key=new_vertex.get)
        )
        outer = min(((i - shift) % n, SIDES[s]) for i, s in self.faces[self.outer_face])
        return sequence, rotations, outer

    @cached_property
    def canonical_shift(self) -> int:
        if self.is_circle:
            return 0
        return min(range(self.n_visits), key=self._shifted_form)

    @cached_property
    def canonical_key(self) -> tuple:
        if self.is_circle:
            return (), (), (0, self.outer[1])
        return self._shifted_form(self.canonical_shift)

    def canonical(self) -> 'CurveMap':
        """The relabeled copy with visits 0, 1, ... and vertices 0, 1, ... in canonical order."""
        sequence, rotations, (arc, side) = self.canonical_key
        if self.is_circle:
            return self.__class__((), {}, {}, (None, side))
        visits = tuple(range(len(sequence)))
        vertex_of = dict(enumerate(sequence))
        rotation = dict(enumerate(rotations))
        return self.__class__(visits, vertex_of, rotation, (arc, side))

    def is_isomorphic(self, other: 'CurveMap') -> bool:
        return self.canonical_key == other.canonical_key

    def relabeled(self, visit_map: dict = None, vertex_map: dict = None) -> 'CurveMap':
        visit_map = visit_map or {}
        vertex_map = vertex_map or {}

        def vm(w):
            return visit_map.get(w, w)

        def xm(v):
            return vertex_map.get(v, v)

        return self.__class__(
            tuple(vm(w) for w in self.visits),
            {vm(w): xm(v) for w, v in self.vertex_of.items()},
            {xm(v): tuple((vm(w), s) for w, s in r) for v, r in self.rotation.items()},
            (vm(self.outer[0]) if self.outer[0] is not None else None, self.outer[1]),
        )

    # ----- symmetries -----
    def reversed(self) -> 'CurveMap':
        """The same curve traversed backwards; face indices change sign."""
        if self.is_circle:
            return self.__class__((), {}, {}, (None, flip(self.outer[1])))
        visits = tuple(reversed(self.visits))
        rotation = {v: tuple((w, -s) for w, s in r) for v, r in self.rotation.items()}
        label, side = self.outer
        i = self.position[label]
        head = self.visits[(i + 1) % self.n_visits]
        return self.__class__(visits, self.vertex_of, rotation, (head, flip(side)))

    def mirrored(self) -> 'CurveMap':
        """Reflection of the plane: rotations reversed, left and right exchanged."""
        rotation = {v: tuple(reversed(r)) for v, r in self.rotation.items()}
        return self.__class__(self.visits, self.vertex_of, rotation, (self.outer[0], flip(self.outer[1])))

    # ----- export -----
    def to_dict(self) -> dict:
        return {
            'visits': list(self.visits),
            'vertex_of': [[w, self.vertex_of[w]] for w in self.visits],
            'rotation': [[v, [list(h) for h in self.rotation[v]]] for v in self.vertices],
            'outer': list(self.outer),
            'faces': [[list(self.dart_key(d)) for d in face] for face in self.faces],
            'indices': [self.face_index[f] for f in range(len(self.faces))],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CurveMap':
        return cls(
            data['visits'], {w: v for w, v in data['vertex_of']},
            {v: tuple(tuple(h) for h in r) for v, r in data['rotation']},
            tuple(data['outer']),
        )

    def __repr__(self) -> str:
        return f'{type(self).__name__}(visits={len(self.visits)}, vertices={len(self.vertices)}, outer={self.outer})'


def default_outer(cm: CurveMap) -> tuple:
    """The face with the most darts, ties broken by the smallest key, as an outer dart."""
    f = min(range(len(cm.faces)), key=lambda f: (-len(cm.faces[f]), cm.face_key(f)))
    i, side = cm.face_key(f)
    return (cm.visits[i] if cm.visits else None), side
