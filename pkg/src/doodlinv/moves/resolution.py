"""
Resolution of multiple points.

A regular multiple point with m branches is modelled by m straight lines through the origin whose rays follow the
rotation of the vertex. One branch is translated off the vertex by a unit offset to its left (+1) or right (-1);
it then crosses every other branch once, close to the vertex, and the rotations at the new double points are read
off exactly. The outside of a small disk around the vertex is untouched.
"""
from fractions import Fraction

from doodlinv.diagrams.curve_map import CurveMap
from doodlinv.diagrams.planar_diagram import sign_from
from doodlinv.diagrams.polyline import cross, pseudo_angle
from doodlinv.errors import AmbiguousSide, InternalInconsistency, ValidationError
from doodlinv.moves.moves import _fresh_labels, _fresh_vertices
from doodlinv.moves.quasidoodle import DegenerationProcess, FormTriple, JoinBranch, Quasidoodle


def ray_direction(k: int, m: int) -> tuple:
    """Direction of the k-th of 2m rays at a multiple point, counterclockwise."""
    if k < m:
        return 2, 2*k - (m - 1)
    x, y = ray_direction(k - m, m)
    return -x, -y


def shift_branch(q: Quasidoodle, v, branch, offset: int) -> tuple:
    """
    Moves one branch off a multiple point.

    Parameters
    ----------
    q - Quasidoodle
    v - vertex with at least three branches
    branch - visit label of the branch at v
    offset - +1 moves the branch to its left, -1 to its right

    Returns
    -------
    (Quasidoodle, tuple of the new double points)
    """
    cm = q.curve_map
    if offset not in (1, -1):
        raise ValidationError(f'offset must be +1 or -1, got {offset}')
    branches = q.branches(v)
    if len(branches) < 3:
        raise ValidationError(f'vertex {v} is a double point, there is nothing to resolve')
    if branch not in branches:
        raise ValidationError(f'visit {branch} does not pass through vertex {v}')
    r = cm.rotation[v]
    m = len(r)//2
    direction = {h: ray_direction(k, m) for k, h in enumerate(r)}
    u = {w: direction[(w, 1)] for w in branches}
    us = u[branch]
    ns = (-us[1], us[0])
    others = [w for w in branches if w != branch]
    labels = iter(_fresh_labels(cm, 2*len(others)))
    new_vertices = _fresh_vertices(cm, len(others))
    rotation = {x: rr for x, rr in cm.rotation.items()}
    rotation[v] = tuple(h for h in r if h[0] != branch)
    vertex_of = {w: x for w, x in cm.vertex_of.items() if w != branch}
    t_other, t_shifted, new_label = {}, {}, {}
    for w, x in zip(others, new_vertices):
        denom = cross(u[w], us)
        t_other[w] = Fraction(offset*cross(ns, us), denom)
        t_shifted[w] = Fraction(offset*cross(ns, u[w]), denom)
        y, z = next(labels), next(labels)
        new_label[w] = y, z
        vertex_of[y] = vertex_of[z] = x
        rays = {(y, 1): u[w], (y, -1): (-u[w][0], -u[w][1]), (z, 1): us, (z, -1): (-us[0], -us[1])}
        rotation[x] = tuple(sorted(rays, key=lambda h: pseudo_angle(rays[h])))
    zs = [new_label[w][1] for w in sorted(others, key=t_shifted.get)]
    visits = []
    for w in cm.visits:
        if w == branch:
            visits.extend(zs)
        elif w in new_label and t_other[w] < 0:
            visits.extend([new_label[w][0], w])
        elif w in new_label:
            visits.extend([w, new_label[w][0]])
        else:
            visits.append(w)

    def exit_label(w):
        if w == branch:
            return zs[-1]
        if w in new_label and t_other[w] > 0:
            return new_label[w][0]
        return w

    outer = (exit_label(cm.outer[0]), cm.outer[1])
    try:
        out = CurveMap(visits, vertex_of, rotation, outer)
    except ValidationError as e:
        raise InternalInconsistency(f'shifting branch {branch} off vertex {v} produced an invalid map: {e}') from e
    return Quasidoodle(out, exit_label(q.basepoint)), tuple(new_vertices)


def triple_sum(q: Quasidoodle, vertices) -> Fraction:
    """Sum of sign times index over double points, signs read from the basepoint of q."""
    cm = q.curve_map
    return sum(sign_from(cm, q.basepoint, x)*cm.vertex_index(x) for x in vertices)


def resolve_branch(q: Quasidoodle, v, branch) -> tuple:
    """
    The two resolutions of v obtained by moving one branch off it, positive first.

    A triple point's positive side has the greater sum of sign times index over its three double points; for more
    branches the positive side is the one where the remaining multiple point has the greater index.
    """
    results = {}
    for offset in (1, -1):
        resolved, new_vertices = shift_branch(q, v, branch, offset)
        if q.multiplicity(v) == 3:
            score = triple_sum(resolved, (v,) + new_vertices)
        else:
            score = resolved.curve_map.vertex_index(v)
        results[offset] = score, resolved
    (left_score, left), (right_score, right) = results[1], results[-1]
    if left_score == right_score:
        raise AmbiguousSide(f'both resolutions of vertex {v} along branch {branch} score {left_score}')
    return (left, right) if left_score > right_score else (right, left)


def resolve_last(q: Quasidoodle, dp: DegenerationProcess) -> tuple:
    """
    Parameters
    ----------
    q - Quasidoodle of complexity >= 2
    dp - DegenerationProcess building q

    Returns
    -------
    (plus, minus) quasidoodles of complexity one less, for the surgery undoing the last step of dp
    """
    if not len(dp):
        raise ValidationError('the process has no steps, a regular diagram has nothing to resolve')
    dp.check(q)
    step = dp.last
    if isinstance(step, FormTriple):
        return resolve_branch(q, step.vertex, min(step.branches))
    if isinstance(step, JoinBranch):
        return resolve_branch(q, step.vertex, step.branch)
    raise ValidationError(f'{step!r} is not a degeneration step')


def resolve_vertex(q: Quasidoodle, v, side: str = '+', branch=None) -> Quasidoodle:
    """One resolution of v; the branch moved defaults to the smallest visit label."""
    if side not in ('+', '-'):
        raise ValidationError(f'side must be + or -, got {side!r}')
    plus, minus = resolve_branch(q, v, min(q.branches(v)) if branch is None else branch)
    return plus if side == '+' else minus


def resolve_all(q: Quasidoodle, sides: dict = None) -> Quasidoodle:
    """Resolves every multiple point down to a regular diagram; sides maps vertex -> '+' | '-' for each step."""
    sides = sides or {}
    while q.multiple_vertices:
        v = q.multiple_vertices[0]
        q = resolve_vertex(q, v, sides.get(v, '+'))
    return q
