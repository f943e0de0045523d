"""
Index moments of regular diagrams and their behaviour across walls of the discriminant.
"""
from dataclasses import dataclass
from math import factorial

from doodlinv.diagrams.planar_diagram import Basepoint, PlanarDiagram
from doodlinv.errors import AmbiguousSide, ValidationError, WallSignMismatch
from doodlinv.moves.moves import apply_move
from doodlinv.moves.quasidoodle import Quasidoodle
from doodlinv.moves.resolution import resolve_branch, shift_branch, triple_sum


def binom_falling(i: int, beta: int) -> int:
    """i(i - 1)...(i - beta + 1)/beta!, exact for every integer i."""
    if beta < 1:
        raise ValidationError(f'beta must be >= 1, got {beta}')
    i = int(i)
    numerator = 1
    for k in range(beta):
        numerator *= i - k
    out, rest = divmod(numerator, factorial(beta))
    if rest:
        raise ValidationError(f'index {i} gave a non-integral binomial')
    return out


def moment(d: PlanarDiagram, bp: Basepoint = None, beta: int = 1) -> int:
    """
    Sum over crossings of sign times (index choose beta), plus twice (basepoint index choose beta + 1).

    Parameters
    ----------
    d - PlanarDiagram
    bp - Basepoint, default the first arc
    beta - int >= 1
    """
    if beta < 1:
        raise ValidationError(f'beta must be >= 1, got {beta}')
    bp = d.basepoint() if bp is None else bp
    total = sum(d.crossing_sign(bp, x)*binom_falling(d.crossing_index(x), beta) for x in d.crossings)
    return total + 2*binom_falling(d.basepoint_index(bp), beta + 1)


def strangeness(d: PlanarDiagram, bp: Basepoint = None) -> int:
    return moment(d, bp, 1)


def moments(d: PlanarDiagram, max_beta: int = 3) -> dict:
    return {beta: moment(d, None, beta) for beta in range(1, max_beta + 1)}


def kink_jump(d: PlanarDiagram, event, beta: int = 1) -> int:
    """Change of M(beta) across one move event, measured."""
    return moment(apply_move(d, event), None, beta) - moment(d, None, beta)


@dataclass(frozen=True)
class WallCoorientation:
    """
    Sums of sign times index over the three double points on each side of a triple point.

    Attributes
    ----------
    vertex: the triple point
    left, right: sums when the smallest branch is moved to its left or right
    positive: 'L' or 'R', the side with the greater sum
    """
    vertex: int
    left: object
    right: object
    positive: str

    def to_dict(self) -> dict:
        return {'vertex': self.vertex, 'left': str(self.left), 'right': str(self.right), 'positive': self.positive}


def wall_coorientation(q: Quasidoodle, v) -> WallCoorientation:
    if q.multiplicity(v) != 3:
        raise ValidationError(f'vertex {v} has {q.multiplicity(v)} branches, a wall needs a triple point')
    branch = min(q.branches(v))
    sums = {}
    for offset, side in ((1, 'L'), (-1, 'R')):
        resolved, new_vertices = shift_branch(q, v, branch, offset)
        sums[side] = triple_sum(resolved, (v,) + new_vertices)
    if sums['L'] == sums['R']:
        raise AmbiguousSide(f'both sides of the wall at triple point {v} give the sum {sums["L"]}')
    positive = 'L' if sums['L'] > sums['R'] else 'R'
    return WallCoorientation(v, sums['L'], sums['R'], positive)


def strangeness_jump(q: Quasidoodle, v=None) -> int:
    """M(1) on the positive side minus M(1) on the negative side of a quasidoodle with one triple point."""
    if q.complexity != 2:
        raise ValidationError(f'a wall crossing needs exactly one triple point, complexity is {q.complexity}')
    v = q.multiple_vertices[0] if v is None else v
    plus, minus = resolve_branch(q, v, min(q.branches(v)))
    jump = strangeness(plus.to_diagram()) - strangeness(minus.to_diagram())
    if jump != 1:
        raise WallSignMismatch(f'strangeness jumps by {jump} across the wall at triple point {v}')
    return jump
