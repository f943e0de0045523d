"""
Polyline realizations of configuration classes as quasidoodles.

Group g is realized by straight passes through the point (40g, 0), one pass per point of the group, in the cyclic
order of the clique. Consecutive passes are joined by connectors that climb to a private height above everything
else, so the only multiple points are the group centers.
"""
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.cliques.modes import FormTuple, degeneration_modes
from doodlinv.diagrams.polyline import trace_polyline
from doodlinv.errors import InternalInconsistency, NonGeneric, ValidationError
from doodlinv.moves.quasidoodle import DegenerationProcess, FormTriple, JoinBranch, Quasidoodle
from doodlinv.moves.resolution import ray_direction

GROUP_SPACING = 40
PASS_SCALE = 3


@dataclass
class Realization:
    """
    Attributes
    ----------
    quasidoodle: Quasidoodle
    clique_class: CliqueClass realized
    centers: group -> vertex id of its multiple point
    pass_visits: slot position -> visit label of the pass through the center
    points: the polyline
    seed: seed of the successful attempt
    """
    quasidoodle: Quasidoodle
    clique_class: CliqueClass
    centers: dict
    pass_visits: tuple
    points: list
    seed: int

    def process(self, mode, sides=None) -> DegenerationProcess:
        """The degeneration process of the quasidoodle following a marking order of the clique class."""
        steps = []
        for step in mode:
            v = self.centers[step.group]
            if isinstance(step, FormTuple):
                steps.append(FormTriple(v, frozenset(self.pass_visits[p] for p in step.points)))
            else:
                steps.append(JoinBranch(v, self.pass_visits[step.point]))
        return DegenerationProcess(tuple(steps), sides)

    def processes(self) -> list:
        return [self.process(mode) for mode in degeneration_modes(self.clique_class)]


def _polyline(cls: CliqueClass, rng: Random) -> list:
    sizes = cls.group_sizes
    lines = {}
    for g, a in enumerate(sizes):
        order = list(range(a))
        rng.shuffle(order)
        lines[g] = [(k, rng.choice((1, -1))) for k in order]
    used = {g: 0 for g in lines}
    passes = []
    for g, _ in cls.slots:
        k, sign = lines[g][used[g]]
        used[g] += 1
        x, y = ray_direction(k, sizes[g])
        center = (Fraction(GROUP_SPACING*g), Fraction(0))
        step = (sign*PASS_SCALE*x, sign*PASS_SCALE*y)
        passes.append((center, (center[0] - step[0], center[1] - step[1]), (center[0] + step[0], center[1] + step[1])))
    top = PASS_SCALE*max(sizes) + 10
    points = []
    for j, (center, start, end) in enumerate(passes):
        next_center, next_start, _ = passes[(j + 1) % len(passes)]
        height = top + 3*j + Fraction(rng.randint(1, 999), 1000)
        out1 = 1 if end[0] > center[0] else -1
        out2 = 1 if next_start[0] > next_center[0] else -1
        d1, d2 = (Fraction(rng.randint(250, 1000), 1000) for _ in range(2))
        points.extend([start, end, (end[0] + out1*d1, height), (next_start[0] + out2*d2, height)])
    return points


def realize_class(cls: CliqueClass, seed: int = 0, max_attempts: int = 50) -> Realization:
    """
    Parameters
    ----------
    cls - configuration class of arity 3 (no coincident points)
    seed - int, selects the directions and orientations of the passes and the connector jitter
    max_attempts - number of re-draws when a drawing is not generic

    Returns
    -------
    Realization
    """
    if cls.k != 3 or not cls.is_configuration:
        raise ValidationError(f'{cls.code} is not a configuration of triple-point type, it cannot be realized')
    for attempt in range(max_attempts):
        rng = Random(seed*max_attempts + attempt)
        points = _polyline(cls, rng)
        try:
            trace = trace_polyline(points, allow_multiple=True)
        except NonGeneric:
            continue
        cm = trace.curve_map
        vertex_at = {p: v for v, p in trace.vertex_points.items()}
        centers = {g: vertex_at.get((Fraction(GROUP_SPACING*g), Fraction(0))) for g in range(cls.num_groups)}
        if any(v is None or cm.multiplicity(v) != a for v, a in zip(centers.values(), cls.group_sizes)):
            continue
        if len(cm.multiple_vertices) != cls.num_groups:
            continue
        pass_visits = tuple(
            trace.visit_at(4*j, (Fraction(GROUP_SPACING*g), Fraction(0))) for j, (g, _) in enumerate(cls.slots)
        )
        q = Quasidoodle(cm, trace.basepoint)
        return Realization(q, cls, centers, pass_visits, points, seed*max_attempts + attempt)
    raise InternalInconsistency(f'no generic realization of {cls.code} in {max_attempts} attempts from seed {seed}')


def distinct_realizations(cls: CliqueClass, count: int = 3, seed: int = 0, max_seeds: int = 50) -> list:
    """Realizations with pairwise different quasidoodles, as many as `count` if found within max_seeds seeds."""
    out, keys = [], set()
    for s in range(seed, seed + max_seeds):
        r = realize_class(cls, s)
        if r.quasidoodle.canonical_key not in keys:
            keys.add(r.quasidoodle.canonical_key)
            out.append(r)
        if len(out) == count:
            break
    return out
