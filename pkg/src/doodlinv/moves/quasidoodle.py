"""
Quasidoodles: curve maps whose multiple points are regular (every branch passes straight through), together with
their degeneration processes.
"""
from dataclasses import dataclass, field
from itertools import product

from doodlinv.cliques.modes import FormTuple, marking_orders
from doodlinv.diagrams.curve_map import CurveMap
from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.errors import BranchNotAdjacent, InternalInconsistency, ValidationError
from doodlinv.moves.moves import _fresh_vertices, _is_triangle, _find_face, carrier, remap_outer

SIDE_SIGNS = ('+', '-')


def is_regular_rotation(r: tuple) -> bool:
    """True iff opposite half-edges belong to one visit, in and out."""
    m = len(r)//2
    return all(r[k][0] == r[k + m][0] and r[k][1] == -r[k + m][1] for k in range(m))


class Quasidoodle:
    """
    A regular quasidoodle with a basepoint.

    Attributes
    ----------
    curve_map: CurveMap
    basepoint: tail label of the arc carrying the basepoint (None on the circle)
    """
    def __init__(self, curve_map: CurveMap, basepoint=None):
        self.curve_map = curve_map
        if basepoint is None and curve_map.visits:
            basepoint = curve_map.visits[0]
        if curve_map.visits and basepoint not in curve_map.position:
            raise ValidationError(f'basepoint arc {basepoint} is not an arc of the quasidoodle')
        self.basepoint = basepoint
        for v, r in curve_map.rotation.items():
            if not is_regular_rotation(r):
                raise ValidationError(f'vertex {v} is not a regular multiple point, branches must pass straight')

    @classmethod
    def from_diagram(cls, d: PlanarDiagram, basepoint=None) -> 'Quasidoodle':
        return cls(d, basepoint)

    @property
    def complexity(self) -> int:
        return self.curve_map.complexity

    @property
    def multiple_vertices(self) -> tuple:
        return self.curve_map.multiple_vertices

    def branches(self, v) -> tuple:
        if v not in self.curve_map.rotation:
            raise ValidationError(f'no vertex {v!r} in the quasidoodle')
        return self.curve_map.visits_at[v]

    def multiplicity(self, v) -> int:
        return len(self.branches(v))

    def to_diagram(self) -> PlanarDiagram:
        if self.complexity:
            raise ValidationError(f'a quasidoodle of complexity {self.complexity} is not a regular diagram')
        return PlanarDiagram.from_map(self.curve_map)

    @property
    def canonical_key(self) -> tuple:
        return self.curve_map.canonical_key

    def is_isomorphic(self, other: 'Quasidoodle') -> bool:
        return self.canonical_key == other.canonical_key

    def to_dict(self) -> dict:
        out = self.curve_map.to_dict()
        out['basepoint'] = self.basepoint
        out['complexity'] = self.complexity
        out['multiple_points'] = [
            {'vertex': v, 'branches': list(self.branches(v)), 'index': _jsonable(self.curve_map.vertex_index(v))}
            for v in self.multiple_vertices
        ]
        return out

    def __repr__(self) -> str:
        return f'Quasidoodle(complexity={self.complexity}, multiple_points={len(self.multiple_vertices)})'


def _jsonable(value):
    return value if isinstance(value, int) else str(value)


@dataclass(frozen=True)
class FormTriple:
    """Three branches meet at a new triple point."""
    vertex: int
    branches: frozenset

    def to_dict(self) -> dict:
        return {'step': 'form', 'vertex': self.vertex, 'branches': sorted(self.branches)}


@dataclass(frozen=True)
class JoinBranch:
    """One more branch joins a multiple point."""
    vertex: int
    branch: int

    def to_dict(self) -> dict:
        return {'step': 'join', 'vertex': self.vertex, 'branch': self.branch}


@dataclass(frozen=True)
class DegenerationProcess:
    """
    Ordered steps building the multiple points of a quasidoodle, and the side ('+' | '-') each step is approached
    from. Sides label the approach only; characteristic numbers are computed from both resolutions of every step.
    """
    steps: tuple
    sides: tuple = field(default=None)

    def __post_init__(self):
        steps = tuple(self.steps)
        sides = tuple(self.sides) if self.sides is not None else ('+',)*len(steps)
        if len(sides) != len(steps) or any(s not in SIDE_SIGNS for s in sides):
            raise ValidationError(f'a process with {len(steps)} steps needs as many sides, each + or -')
        object.__setattr__(self, 'steps', steps)
        object.__setattr__(self, 'sides', sides)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def last(self):
        return self.steps[-1]

    def without_last(self) -> 'DegenerationProcess':
        return DegenerationProcess(self.steps[:-1], self.sides[:-1])

    @property
    def marking_order(self) -> tuple:
        return self.steps

    def check(self, q: Quasidoodle) -> None:
        """ValidationError unless the steps build exactly the multiple points of q."""
        marked = {}
        for step in self.steps:
            branches = set(q.branches(step.vertex))
            if isinstance(step, FormTriple):
                if step.vertex in marked:
                    raise ValidationError(f'vertex {step.vertex} is formed twice')
                if len(step.branches) != 3 or not set(step.branches) <= branches:
                    raise ValidationError(f'{step} does not name three branches of vertex {step.vertex}')
                marked[step.vertex] = set(step.branches)
            elif isinstance(step, JoinBranch):
                if step.vertex not in marked:
                    raise ValidationError(f'{step} comes before vertex {step.vertex} is formed')
                if step.branch not in branches or step.branch in marked[step.vertex]:
                    raise ValidationError(f'{step} names a branch that is not free at vertex {step.vertex}')
                marked[step.vertex].add(step.branch)
            else:
                raise ValidationError(f'{step!r} is not a degeneration step')
        for v in q.multiple_vertices:
            if marked.get(v) != set(q.branches(v)):
                raise ValidationError(f'the process does not build multiple point {v} completely')
        if set(marked) != set(q.multiple_vertices):
            raise ValidationError('the process forms a vertex that is not a multiple point')

    def to_dict(self) -> dict:
        return {'steps': [s.to_dict() for s in self.steps], 'sides': list(self.sides)}

    @classmethod
    def from_dict(cls, data: dict) -> 'DegenerationProcess':
        steps = []
        for s in data['steps']:
            if s['step'] == 'form':
                steps.append(FormTriple(s['vertex'], frozenset(s['branches'])))
            elif s['step'] == 'join':
                steps.append(JoinBranch(s['vertex'], s['branch']))
            else:
                raise ValidationError(f'unknown step {s["step"]!r}')
        return cls(tuple(steps), tuple(data.get('sides') or ('+',)*len(steps)))


def marking_orders_of(q: Quasidoodle) -> list:
    """Every marking order of the branches of the multiple points of q, as tuples of steps."""
    points = {v: sorted(q.branches(v)) for v in q.multiple_vertices}
    orders = []
    for order in marking_orders(points, 3):
        orders.append(tuple(
            FormTriple(s.group, s.points) if isinstance(s, FormTuple) else JoinBranch(s.group, s.point) for s in order
        ))
    return orders


def enumerate_processes(q: Quasidoodle) -> list:
    """All degeneration processes: marking orders times the sides of every step."""
    out = []
    for steps in marking_orders_of(q):
        out.extend(DegenerationProcess(steps, sides) for sides in product(SIDE_SIGNS, repeat=len(steps)))
    return out


# ----- building multiple points -----
def collapse_triangle(d: PlanarDiagram, arcs, basepoint=None) -> tuple:
    """
    Shrinks a bounded triangle face of a diagram to a triple point.

    Parameters
    ----------
    d - PlanarDiagram (or a quasidoodle map whose triangle corners are double points)
    arcs - the three arc tails of the triangle
    basepoint - arc tail carrying the basepoint, default the first arc

    Returns
    -------
    (Quasidoodle, DegenerationProcess with the single FormTriple)
    """
    event = f'collapse of triangle {tuple(sorted(arcs))}'
    f = _find_face(d, arcs, _is_triangle, event)
    n = d.n_visits
    merged, renamed, tails, heads = [], {}, [], set()
    for i, s in d.faces[f]:
        arriving = (d.visits[(i + 1) % n], -1) if s == 1 else (d.visits[i], 1)
        v, idx = d._slot[arriving]
        r = d.rotation[v]
        if len(r) != 4:
            raise ValidationError(f'{event}: corner {v} is not a double point')
        merged.extend([r[(idx + 1) % 4], r[(idx + 2) % 4]])
        tail, head = d.visits[i], d.visits[(i + 1) % n]
        tails.append(tail)
        heads.add(head)
        renamed[(head, 1)] = (tail, 1)
    x, = _fresh_vertices(d, 1)
    dead = {d.vertex_of[w] for w in tails}
    rotation = {v: r for v, r in d.rotation.items() if v not in dead}
    rotation[x] = tuple(renamed.get(h, h) for h in merged)
    visits = [w for w in d.visits if w not in heads]
    vertex_of = {w: d.vertex_of[w] for w in visits}
    vertex_of.update({w: x for w in tails})
    kept = set(visits)
    outer = remap_outer(d, kept, set(tails))
    cm = _build_map(event, visits, vertex_of, rotation, outer)
    bp = d.visits[0] if basepoint is None else basepoint
    if bp in tails:
        bp = d.visits[(d.position[bp] - 1) % n]
    q = Quasidoodle(cm, carrier(d, bp, kept))
    return q, DegenerationProcess((FormTriple(x, frozenset(tails)),))


def _fan(q: Quasidoodle, v, y1) -> tuple:
    """Visits y_j of the joining strand, partner visits x_j, and the rays of v hitting them, in strand order."""
    cm = q.curve_map
    n = cm.n_visits
    m = cm.multiplicity(v)
    if y1 not in cm.position:
        raise BranchNotAdjacent(f'no visit {y1} in the quasidoodle')
    start = cm.position[y1]
    ys = [cm.visits[(start + j) % n] for j in range(m)]
    partners, rays = [], []
    for y in ys:
        c = cm.vertex_of[y]
        if c == v or cm.multiplicity(c) != 2:
            raise BranchNotAdjacent(f'visit {y} is not at a double point next to vertex {v}')
        x, = [w for w in cm.visits_at[c] if w != y]
        i = cm.position[x]
        before, after = cm.visits[(i - 1) % n], cm.visits[(i + 1) % n]
        candidates = []
        if cm.vertex_of[before] == v:
            candidates.append((before, 1))
        if cm.vertex_of[after] == v:
            candidates.append((after, -1))
        if len(candidates) != 1:
            raise BranchNotAdjacent(f'crossing {c} is not joined to vertex {v} by a single ray')
        partners.append(x)
        rays.append(candidates[0])
    return ys, partners, rays


def join_branch(q: Quasidoodle, v, y1) -> tuple:
    """
    Moves the strand through the visits y1, next(y1), ... across multiple point v until it passes through it.

    The strand must cut every ray on one side of v, as many rays as v has branches, and the sectors between
    consecutive rays must be triangles with a side on the strand.

    Returns
    -------
    (Quasidoodle with multiplicity of v one higher, JoinBranch step)
    """
    cm = q.curve_map
    if v not in cm.rotation:
        raise BranchNotAdjacent(f'no vertex {v!r} in the quasidoodle')
    ys, partners, rays = _fan(q, v, y1)
    r = cm.rotation[v]
    idx = [r.index(h) for h in rays]
    size = len(r)
    if all((b - a) % size == 1 for a, b in zip(idx, idx[1:])):
        ccw = True
        sectors = idx[:-1]
    elif all((a - b) % size == 1 for a, b in zip(idx, idx[1:])):
        ccw = False
        sectors = idx[1:]
    else:
        raise BranchNotAdjacent(f'the strand from visit {y1} does not cut consecutive rays of vertex {v}')
    sector_faces = cm.sector_faces(v)
    strand_arcs = {cm.position[y] for y in ys[:-1]}
    for k in sectors:
        face = sector_faces[k]
        if face == cm.outer_face or len(cm.faces[face]) != 3 or not {i for i, _ in cm.faces[face]} & strand_arcs:
            raise BranchNotAdjacent(f'the sector of vertex {v} at ray {r[k]} is not a triangle on the strand')
    z = ys[0]
    new_r = []
    for h in r:
        if ccw:
            if h == rays[0]:
                new_r.append((z, -1))
            new_r.append(h)
            if h == rays[-1]:
                new_r.append((z, 1))
        else:
            if h == rays[-1]:
                new_r.append((z, 1))
            new_r.append(h)
            if h == rays[0]:
                new_r.append((z, -1))
    gone = set(ys[1:]) | set(partners)
    dead = {cm.vertex_of[y] for y in ys}
    rotation = {u: rr for u, rr in cm.rotation.items() if u not in dead}
    rotation[v] = tuple(new_r)
    visits = [w for w in cm.visits if w not in gone]
    vertex_of = {w: cm.vertex_of[w] for w in visits}
    vertex_of[z] = v
    kept = set(visits)
    fan_arcs = {w if s == 1 else x for (w, s), x in zip(rays, partners)}
    outer = remap_outer(cm, kept, set(ys) | fan_arcs)
    out = _build_map(f'join of visit {y1} to vertex {v}', visits, vertex_of, rotation, outer)
    return Quasidoodle(out, carrier(cm, q.basepoint, kept)), JoinBranch(v, z)


def _build_map(event: str, visits, vertex_of, rotation, outer) -> CurveMap:
    try:
        return CurveMap(visits, vertex_of, rotation, outer)
    except ValidationError as e:
        raise InternalInconsistency(f'{event} produced an invalid map: {e}') from e
