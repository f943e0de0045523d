"""
Generic immersed closed plane curves: 4-valent curve maps with index data.
"""
from dataclasses import dataclass
from functools import cached_property

from doodlinv.diagrams.curve_map import CurveMap, SIDES, cyclic_min, default_outer
from doodlinv.errors import DuplicateVisit, InternalInconsistency, MissingVisit, UnknownCrossing, ValidationError


def crossing_rotation(first: int, second: int, chirality: int) -> tuple:
    """
    Counterclockwise half-edges at a crossing visited at first and then at second.

    chirality +1: the second strand crosses the first from its left to its right.
    """
    if chirality == 1:
        return (first, 1), (second, -1), (first, -1), (second, 1)
    if chirality == -1:
        return (first, 1), (second, 1), (first, -1), (second, -1)
    raise ValidationError(f'chirality must be +1 or -1, got {chirality}')


def rotation_chirality(rotation: tuple, first: int, second: int):
    """+1 or -1 for a transverse crossing, None when the pattern is not a crossing of the two visits."""
    r = cyclic_min(rotation)
    start = r.index((first, 1))
    r = r[start:] + r[:start]
    for c in (1, -1):
        if r == crossing_rotation(first, second, c):
            return c
    return None


@dataclass(frozen=True)
class Basepoint:
    """
    A regular point of the curve, on the arc with tail visit `arc` (None on the circle).
    """
    arc: int = None

    def to_dict(self) -> dict:
        return {'arc': self.arc}


@dataclass(frozen=True)
class FaceIndexMap:
    """
    Attributes
    ----------
    keys: face number -> face key (arc index, side)
    values: face number -> index
    outer: face number of the unbounded face
    """
    keys: dict
    values: dict
    outer: int

    def __getitem__(self, item) -> int:
        if isinstance(item, tuple):
            return self.values[{k: f for f, k in self.keys.items()}[item]]
        return self.values[item]

    def by_key(self) -> dict:
        return {f'{i}{side}': self.values[f] for f, (i, side) in sorted(self.keys.items(), key=lambda x: x[1])}

    def multiset(self) -> list:
        return sorted(self.values.values())


class PlanarDiagram(CurveMap):
    """
    A generic immersed closed curve: every vertex is a transverse double point.

    Crossing ids are the vertex ids. The first visit of a crossing is its first visit in the visit sequence.
    """
    def validate(self) -> None:
        super().validate()
        for v, r in self.rotation.items():
            if len(r) != 4:
                raise ValidationError(f'crossing {v} has {len(r)//2} branches, a diagram needs double points')
            first, second = self.visits_at[v]
            if rotation_chirality(r, first, second) is None:
                raise ValidationError(f'crossing {v} is not transverse')

    @classmethod
    def from_map(cls, cm: CurveMap) -> 'PlanarDiagram':
        return cls(cm.visits, cm.vertex_of, cm.rotation, cm.outer)

    @classmethod
    def circle(cls, side: str = 'R') -> 'PlanarDiagram':
        """The crossing-free circle; side R puts the unbounded face on the right (counterclockwise circle)."""
        return cls((), {}, {}, (None, side))

    @classmethod
    def from_gauss(cls, sequence, chirality: dict, outer: tuple = None) -> 'PlanarDiagram':
        """
        Parameters
        ----------
        sequence - crossing ids in curve order, each exactly twice
        chirality - crossing id -> +1 | -1
        outer - (arc index, 'L' | 'R') of a dart on the unbounded face, default the face with the most darts
        """
        sequence = list(sequence)
        counts = {}
        for x in sequence:
            counts[x] = counts.get(x, 0) + 1
        for x, c in counts.items():
            if c > 2:
                raise DuplicateVisit(f'crossing {x} is visited {c} times')
            if c < 2:
                raise MissingVisit(f'crossing {x} is visited only once')
        for x in chirality:
            if x not in counts:
                raise UnknownCrossing(f'chirality given for unknown crossing {x}')
        for x in counts:
            if x not in chirality:
                raise MissingVisit(f'no chirality given for crossing {x}')
        if not sequence:
            side = outer[1] if outer is not None else 'R'
            return cls.circle(side)
        positions = {}
        for p, x in enumerate(sequence):
            positions.setdefault(x, []).append(p)
        vertex_of = {p: x for p, x in enumerate(sequence)}
        rotation = {x: crossing_rotation(a, b, int(chirality[x])) for x, (a, b) in positions.items()}
        visits = tuple(range(len(sequence)))
        if outer is None:
            draft = CurveMap(visits, vertex_of, rotation, (0, 'L'), check=False)
            outer = default_outer(draft)
        else:
            i, side = outer
            if not 0 <= int(i) < len(sequence) or side not in SIDES.values():
                raise ValidationError(f'outer face key {i}{side} does not name a dart')
            outer = (visits[int(i)], side)
        return cls(visits, vertex_of, rotation, outer)

    # ----- crossings -----
    @property
    def crossings(self) -> tuple:
        return self.vertices

    @property
    def n_crossings(self) -> int:
        return len(self.vertices)

    def _check_crossing(self, x) -> None:
        if x not in self.rotation:
            raise UnknownCrossing(f'no crossing {x!r} in the diagram')

    def chirality(self, x) -> int:
        self._check_crossing(x)
        first, second = self.visits_at[x]
        return rotation_chirality(self.rotation[x], first, second)

    @cached_property
    def gauss_sequence(self) -> tuple:
        return tuple(self.vertex_of[w] for w in self.visits)

    def crossing_index(self, x) -> int:
        self._check_crossing(x)
        return self.vertex_index(x)

    def basepoint(self, arc=None) -> Basepoint:
        if self.is_circle:
            return Basepoint(None)
        return Basepoint(self.visits[0] if arc is None else arc)

    def basepoints(self) -> list:
        return [Basepoint(None)] if self.is_circle else [Basepoint(w) for w in self.visits]

    def crossing_sign(self, bp: Basepoint, x) -> int:
        """
        +1 iff, at the visit of x met first after the basepoint, the other branch arrives from the ray right after
        the outgoing ray in counterclockwise order.

        This is the opposite of the literal reading "the frame (first tangent, second tangent) is positively
        oriented" in the counterclockwise plane. The opposite sign is the one that makes M(beta) independent of the
        basepoint, which the moment tests check on random diagrams.
        """
        self._check_crossing(x)
        return sign_from(self, bp.arc, x)

    def basepoint_index(self, bp: Basepoint) -> int:
        i = self.arc_index(bp.arc)
        return max(self.face_index[self.left_face(i)], self.face_index[self.right_face(i)])

    def face_indices(self) -> FaceIndexMap:
        keys = {f: self.face_key(f) for f in range(len(self.faces))}
        return FaceIndexMap(keys, dict(self.face_index), self.outer_face)

    def reverse(self) -> 'PlanarDiagram':
        return self.reversed()

    def mirror(self) -> 'PlanarDiagram':
        return self.mirrored()

    def to_json(self) -> dict:
        out = self.to_dict()
        out['crossings'] = [
            {'id': x, 'visits': list(self.visits_at[x]), 'chirality': self.chirality(x),
             'index': self.crossing_index(x)} for x in self.crossings
        ]
        return out


def sign_from(cm: CurveMap, arc, x) -> int:
    """Sign of a double point x of any curve map, visits ordered from a basepoint on the arc with tail `arc`."""
    if arc not in cm.position:
        raise ValidationError(f'basepoint arc {arc} is not an arc of the map')
    if cm.multiplicity(x) != 2:
        raise ValidationError(f'vertex {x} is not a double point')
    start = (cm.position[arc] + 1) % cm.n_visits
    first, second = sorted(cm.visits_at[x], key=lambda w: (cm.position[w] - start) % cm.n_visits)
    c = rotation_chirality(cm.rotation[x], first, second)
    if c is None:
        raise InternalInconsistency(f'crossing {x} lost its transverse pattern')
    return c


def crossing_index(d: PlanarDiagram, x) -> int:
    return d.crossing_index(x)


def crossing_sign(d: PlanarDiagram, bp: Basepoint, x) -> int:
    return d.crossing_sign(bp, x)


def basepoint_index(d: PlanarDiagram, bp: Basepoint) -> int:
    return d.basepoint_index(bp)


def face_indices(d: CurveMap) -> FaceIndexMap:
    keys = {f: d.face_key(f) for f in range(len(d.faces))}
    return FaceIndexMap(keys, dict(d.face_index), d.outer_face)
