"""
Local moves of regular diagrams.

Kinks (one crossing, a monogon face), tangencies (two crossings, a digon face) and triangle moves (a strand
passing over the crossing of two others). Removal and triangle sites are bounded faces: a local move lives in a small
disk of the plane, so the unbounded face is never its site. Creation sites are an arc with a side, or a pair of darts
on a common face along which a finger of one strand is pushed over the other.

Moves keep every surviving visit label. New visits and vertices get fresh labels, so an event and its inverse give
back the starting diagram up to relabeling.
"""
from dataclasses import dataclass, asdict

from doodlinv.diagrams.curve_map import SIDES, SIGNS
from doodlinv.diagrams.planar_diagram import PlanarDiagram, crossing_rotation
from doodlinv.diagrams.polyline import pseudo_angle
from doodlinv.errors import InternalInconsistency, SiteVanished, ValidationError

MOVE_KINDS = ('kink', 'tangency', 'triangle')


@dataclass(frozen=True)
class KinkRemoval:
    """Removes the monogon bounded by the loop arc with tail `arc`."""
    arc: int
    kind = 'kink-'


@dataclass(frozen=True)
class KinkCreation:
    """Adds a kink on arc `arc` (None on the circle) with its loop on `side` of the arc."""
    arc: int
    side: str
    kind = 'kink+'


@dataclass(frozen=True)
class TangencyRemoval:
    """Pulls apart the two strands bounding the digon with arc tails `arcs`."""
    arcs: tuple
    kind = 'tangency-'


@dataclass(frozen=True)
class TangencyCreation:
    """
    Pushes a finger of the strand at dart `first` = (arc, side) across the strand at dart `second` through their
    common face. For two darts on one arc, `order` 0 takes the finger from the earlier portion of the arc.
    """
    first: tuple
    second: tuple
    order: int = 0
    kind = 'tangency+'


@dataclass(frozen=True)
class TriangleMove:
    """Passes a strand of the triangle with arc tails `arcs` over the crossing of the other two."""
    arcs: tuple
    kind = 'triangle'


EVENT_TYPES = {cls.kind: cls for cls in (KinkRemoval, KinkCreation, TangencyRemoval, TangencyCreation, TriangleMove)}


def event_to_dict(event) -> dict:
    out = {'kind': event.kind}
    for key, value in asdict(event).items():
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def event_from_dict(data: dict):
    data = dict(data)
    kind = data.pop('kind', None)
    if kind not in EVENT_TYPES:
        raise ValidationError(f'unknown move kind {kind!r}, use one of {sorted(EVENT_TYPES)}')
    for key in ('arcs', 'first', 'second'):
        if key in data:
            data[key] = tuple(data[key])
    try:
        return EVENT_TYPES[kind](**data)
    except TypeError as e:
        raise ValidationError(f'bad fields for a {kind} event: {e}') from e


# ----- helpers -----
def _fresh_labels(d, n: int) -> list:
    start = max(d.visits, default=-1) + 1
    return list(range(start, start + n))


def _fresh_vertices(d, n: int) -> list:
    out, v = [], len(d.rotation)
    while len(out) < n:
        if v not in d.rotation:
            out.append(v)
        v += 1
    return out


def carrier(d, label, kept: set):
    """The nearest surviving visit at or before `label` along the curve, None when nothing survives."""
    if label in kept:
        return label
    i = d.position[label]
    for step in range(1, d.n_visits):
        w = d.visits[(i - step) % d.n_visits]
        if w in kept:
            return w
    return None


def remap_outer(d, kept: set, skip: set = frozenset(), rename: dict = None) -> tuple:
    """
    An outer dart for the map after a local change.

    Darts of the old unbounded face are tried, the stored one first; arcs whose tail is in `skip` are passed over
    since the change does not keep their faces. Surviving labels are renamed through `rename`.
    """
    rename = rename or {}
    darts = [d.dart_of(*d.outer)] + list(d.faces[d.outer_face])
    for i, s in darts:
        label = d.visits[i] if d.visits else None
        if label in skip:
            continue
        if label is not None:
            label = carrier(d, label, kept)
        return rename.get(label, label), SIDES[s]
    raise InternalInconsistency(f'no dart of the unbounded face {d.face_key(d.outer_face)} survives the move')


def _rebuild(event, visits, vertex_of, rotation, outer) -> PlanarDiagram:
    try:
        return PlanarDiagram(visits, vertex_of, rotation, outer)
    except ValidationError as e:
        raise InternalInconsistency(f'{event} produced an invalid diagram: {e}') from e


def _tails(d, face) -> list:
    return [d.visits[i] for i, _ in face]


def _bounded_faces(d) -> list:
    return [f for f in range(len(d.faces)) if f != d.outer_face]


def _is_monogon(d, f) -> bool:
    return len(d.faces[f]) == 1 and d.n_visits >= 2


def _is_digon(d, f) -> bool:
    face = d.faces[f]
    if len(face) != 2 or face[0][0] == face[1][0]:
        return False
    n = d.n_visits
    ends = [d.visits[j] for i, _ in face for j in (i, (i + 1) % n)]
    vertices = {d.vertex_of[w] for w in ends}
    return len(set(ends)) == 4 and len(vertices) == 2


def _is_triangle(d, f) -> bool:
    face = d.faces[f]
    if len(face) != 3 or len({i for i, _ in face}) != 3:
        return False
    n = d.n_visits
    ends = [d.visits[j] for i, _ in face for j in (i, (i + 1) % n)]
    if len(set(ends)) != 6 or len({d.vertex_of[w] for w in ends}) != 3:
        return False
    return all(d.vertex_of[d.visits[i]] != d.vertex_of[d.visits[(i + 1) % n]] for i, _ in face)


def _find_face(d, arcs, test, event) -> int:
    arcs = sorted(arcs)
    for f in _bounded_faces(d):
        if sorted(_tails(d, d.faces[f])) == arcs and test(d, f):
            return f
    raise SiteVanished(f'{event} has no matching bounded face in the diagram')


# ----- sites -----
def find_move_sites(d: PlanarDiagram, kinds=MOVE_KINDS, creations: bool = True) -> list:
    """
    All move sites of a diagram in a fixed order: removals and triangle moves first, then creations.

    Parameters
    ----------
    d - PlanarDiagram
    kinds - subset of ('kink', 'tangency', 'triangle')
    creations - include creation sites

    Returns
    -------
    list of events
    """
    sites = []
    for f in _bounded_faces(d):
        face = d.faces[f]
        if 'kink' in kinds and _is_monogon(d, f):
            sites.append(KinkRemoval(d.visits[face[0][0]]))
        elif 'tangency' in kinds and _is_digon(d, f):
            sites.append(TangencyRemoval(tuple(sorted(_tails(d, face)))))
        elif 'triangle' in kinds and _is_triangle(d, f):
            sites.append(TriangleMove(tuple(sorted(_tails(d, face)))))
    if not creations:
        return sites
    labels = list(d.visits) if d.visits else [None]
    if 'kink' in kinds:
        sites.extend(KinkCreation(w, side) for w in labels for side in ('L', 'R'))
    if 'tangency' in kinds:
        for face in d.faces:
            darts = sorted(d.dart_label(dart) for dart in face) if d.visits else [(None, SIDES[face[0][1]])]
            for a, first in enumerate(darts):
                sites.append(TangencyCreation(first, first, 0))
                sites.extend(TangencyCreation(first, second, 0) for second in darts[a + 1:])
    return sites


def removal_sites(d: PlanarDiagram, kinds=('kink', 'tangency')) -> list:
    return [s for s in find_move_sites(d, kinds, creations=False) if not isinstance(s, TriangleMove)]


# ----- moves -----
def _remove_kink(d: PlanarDiagram, event: KinkRemoval):
    if event.arc not in d.position:
        raise SiteVanished(f'{event}: no arc with tail {event.arc}')
    i = d.position[event.arc]
    sides = [s for s in (1, -1) if d.face_of[(i, s)] != d.outer_face and _is_monogon(d, d.face_of[(i, s)])]
    if not sides:
        raise SiteVanished(f'{event}: arc {event.arc} does not bound a monogon')
    a, b = event.arc, d.visits[(i + 1) % d.n_visits]
    v = d.vertex_of[a]
    visits = [w for w in d.visits if w not in (a, b)]
    vertex_of = {w: d.vertex_of[w] for w in visits}
    rotation = {x: r for x, r in d.rotation.items() if x != v}
    kept = set(visits)
    out = _rebuild(event, visits, vertex_of, rotation, remap_outer(d, kept, {a}))
    inverse = KinkCreation(carrier(d, a, kept), SIDES[sides[0]])
    return out, inverse


def _create_kink(d: PlanarDiagram, event: KinkCreation):
    if event.side not in SIGNS:
        raise ValidationError(f'{event}: side must be L or R')
    if d.is_circle != (event.arc is None) or (event.arc is not None and event.arc not in d.position):
        raise SiteVanished(f'{event}: no arc with tail {event.arc}')
    a, b = _fresh_labels(d, 2)
    v, = _fresh_vertices(d, 1)
    rotation = dict(d.rotation)
    rotation[v] = crossing_rotation(a, b, SIGNS[event.side])
    vertex_of = dict(d.vertex_of)
    vertex_of[a] = vertex_of[b] = v
    if d.is_circle:
        visits, outer = [a, b], (b, d.outer[1])
    else:
        i = d.position[event.arc]
        visits = list(d.visits[:i + 1]) + [a, b] + list(d.visits[i + 1:])
        outer = d.outer
    return _rebuild(event, visits, vertex_of, rotation, outer), KinkRemoval(a)


def _remove_tangency(d: PlanarDiagram, event: TangencyRemoval):
    f = _find_face(d, event.arcs, _is_digon, event)
    n = d.n_visits
    (i, _), (j, _) = d.faces[f]
    gone = {d.visits[i], d.visits[(i + 1) % n], d.visits[j], d.visits[(j + 1) % n]}
    dead = {d.vertex_of[w] for w in gone}
    visits = [w for w in d.visits if w not in gone]
    vertex_of = {w: d.vertex_of[w] for w in visits}
    rotation = {x: r for x, r in d.rotation.items() if x not in dead}
    out = _rebuild(event, visits, vertex_of, rotation, remap_outer(d, set(visits), set(event.arcs)))
    return out, None


def _tangency_frame(side1: str, side2: str) -> tuple:
    """Finger direction and the direction of the crossed strand in a frame where the finger strand runs along +x."""
    nf = (0, 1) if side1 == 'L' else (0, -1)
    if nf == (0, 1):
        e2 = (-1, 0) if side2 == 'L' else (1, 0)
    else:
        e2 = (1, 0) if side2 == 'L' else (-1, 0)
    return nf, e2


def _sorted_rotation(directions: dict) -> tuple:
    return tuple(sorted(directions, key=lambda h: pseudo_angle(directions[h])))


def _create_tangency(d: PlanarDiagram, event: TangencyCreation):
    (l1, side1), (l2, side2) = event.first, event.second
    if side1 not in SIGNS or side2 not in SIGNS or event.order not in (0, 1):
        raise ValidationError(f'{event}: sides must be L or R and order 0 or 1')
    for label in (l1, l2):
        if d.is_circle != (label is None) or (label is not None and label not in d.position):
            raise SiteVanished(f'{event}: no arc with tail {label}')
    dart1, dart2 = d.dart_of(l1, side1), d.dart_of(l2, side2)
    if d.face_of[dart1] != d.face_of[dart2]:
        raise SiteVanished(f'{event}: the two darts are not on a common face')
    nf, e2 = _tangency_frame(side1, side2)
    back_nf, back_e2 = (-nf[0], -nf[1]), (-e2[0], -e2[1])
    a1, b1, c, dd = _fresh_labels(d, 4)
    va, vb = _fresh_vertices(d, 2)
    at_a, at_b = (c, dd) if e2 == (1, 0) else (dd, c)
    rotation = dict(d.rotation)
    rotation[va] = _sorted_rotation({(a1, 1): nf, (a1, -1): back_nf, (at_a, 1): e2, (at_a, -1): back_e2})
    rotation[vb] = _sorted_rotation({(b1, 1): back_nf, (b1, -1): nf, (at_b, 1): e2, (at_b, -1): back_e2})
    vertex_of = dict(d.vertex_of)
    vertex_of.update({a1: va, b1: vb, at_a: va, at_b: vb})
    finger, crossed = [a1, b1], [c, dd]
    if dart1 == dart2:
        inserted = {l1: finger + crossed if event.order == 0 else crossed + finger}
    else:
        inserted = {l1: finger, l2: crossed}
    if d.is_circle:
        visits = inserted[None]
        outer = (visits[-1], d.outer[1])
    else:
        visits = []
        for w in d.visits:
            visits.append(w)
            visits.extend(inserted.get(w, []))
        outer = d.outer
    out = _rebuild(event, visits, vertex_of, rotation, outer)
    return out, TangencyRemoval(tuple(sorted((a1, c))))


def _triangle(d: PlanarDiagram, event: TriangleMove):
    f = _find_face(d, event.arcs, _is_triangle, event)
    n = d.n_visits
    swap = {}
    for i, _ in d.faces[f]:
        head, tail = d.visits[(i + 1) % n], d.visits[i]
        swap[head], swap[tail] = tail, head
    vertex_of = {w: d.vertex_of[swap.get(w, w)] for w in d.visits}
    rotation = {v: tuple((swap.get(w, w), s) for w, s in r) for v, r in d.rotation.items()}
    outer = remap_outer(d, set(d.visits), set(event.arcs))
    return _rebuild(event, d.visits, vertex_of, rotation, outer), TriangleMove(tuple(sorted(event.arcs)))


_APPLY = {
    KinkRemoval: _remove_kink, KinkCreation: _create_kink, TangencyRemoval: _remove_tangency,
    TangencyCreation: _create_tangency, TriangleMove: _triangle,
}


def apply_with_inverse(d: PlanarDiagram, event) -> tuple:
    """
    Returns
    -------
    (PlanarDiagram after the event, an event taking it back to d up to relabeling)
    """
    if type(event) not in _APPLY:
        raise ValidationError(f'{event!r} is not a move event')
    out, inverse = _APPLY[type(event)](d, event)
    if inverse is None:
        inverse = _search_inverse(out, d, TangencyCreation)
    return out, inverse


def apply_move(d: PlanarDiagram, event) -> PlanarDiagram:
    """Applies one move; SiteVanished when the site is not in d."""
    if type(event) not in _APPLY:
        raise ValidationError(f'{event!r} is not a move event')
    return _APPLY[type(event)](d, event)[0]


def _search_inverse(after: PlanarDiagram, before: PlanarDiagram, kind):
    for site in find_move_sites(after):
        if isinstance(site, kind) and apply_move(after, site).is_isomorphic(before):
            return site
    raise InternalInconsistency(f'no {kind.__name__} site undoes the move')


def crossing_change(event) -> int:
    return {'kink-': -1, 'kink+': 1, 'tangency-': -2, 'tangency+': 2, 'triangle': 0}[event.kind]
