"""
Move traces, random trace generation and heuristic simplification.
"""
from dataclasses import dataclass, field
from random import Random
import warnings

from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.errors import ValidationError
from doodlinv.moves.moves import KinkRemoval, TangencyRemoval, apply_move, \
    crossing_change, event_from_dict, event_to_dict, find_move_sites, removal_sites

DOODLE_KINDS = ('kink', 'tangency')


@dataclass
class MoveTrace:
    """
    A start diagram and the events applied to it in order.

    Attributes
    ----------
    start: PlanarDiagram
    events: list of move events
    seed: seed the trace was drawn with (None for hand-made traces)
    """
    start: PlanarDiagram
    events: list = field(default_factory=list)
    seed: int = None

    def __len__(self) -> int:
        return len(self.events)

    def diagrams(self) -> list:
        """The running diagram after every prefix, the start included."""
        out = [self.start]
        for event in self.events:
            out.append(apply_move(out[-1], event))
        return out

    def replay(self) -> PlanarDiagram:
        d = self.start
        for event in self.events:
            d = apply_move(d, event)
        return d

    def crossing_counts(self) -> list:
        counts = [self.start.n_crossings]
        for event in self.events:
            counts.append(counts[-1] + crossing_change(event))
        return counts

    def to_dict(self) -> dict:
        return {
            'start': self.start.to_dict(),
            'events': [event_to_dict(e) for e in self.events],
            'seed': self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'MoveTrace':
        try:
            start = PlanarDiagram.from_dict(data['start'])
            events = [event_from_dict(e) for e in data['events']]
        except (KeyError, TypeError) as e:
            raise ValidationError(f'malformed move trace: {e}') from e
        return cls(start, events, data.get('seed'))


def random_trace(d: PlanarDiagram, n: int, seed: int = 0, kinds=DOODLE_KINDS,
                 max_crossings: int = None) -> MoveTrace:
    """
    n events drawn uniformly from the move sites of the running diagram.

    Parameters
    ----------
    d - start diagram
    n - number of events, n >= 0
    seed - int seed of the generator
    kinds - move kinds to draw from
    max_crossings - creations that would exceed this crossing count are not drawn

    Returns
    -------
    MoveTrace
    """
    if n < 0:
        raise ValidationError(f'a trace needs n >= 0 events, got {n}')
    rng = Random(seed)
    events, current = [], d
    for _ in range(n):
        sites = find_move_sites(current, kinds)
        if max_crossings is not None:
            sites = [s for s in sites if current.n_crossings + crossing_change(s) <= max_crossings]
        if not sites:
            break
        event = rng.choice(sites)
        current = apply_move(current, event)
        events.append(event)
    return MoveTrace(d, events, seed)


@dataclass
class SimplifyResult:
    """
    Attributes
    ----------
    diagram: the simplest diagram reached
    events: events leading from the input to it
    reached_circle: True iff the diagram has no crossings
    attempts: randomized excursions spent
    """
    diagram: PlanarDiagram
    events: list
    reached_circle: bool
    attempts: int = 0

    def to_dict(self) -> dict:
        return {
            'crossings': self.diagram.n_crossings,
            'reached_circle': self.reached_circle,
            'attempts': self.attempts,
            'events': [event_to_dict(e) for e in self.events],
            'diagram': self.diagram.to_dict(),
        }


def greedy_reduce(d: PlanarDiagram, kinds=('kink', 'tangency')) -> tuple:
    """Removes monogons while there are any, then a digon, and repeats. Returns (diagram, events)."""
    events = []
    while True:
        sites = removal_sites(d, kinds)
        if not sites:
            return d, events
        kinks = [s for s in sites if isinstance(s, KinkRemoval)]
        event = kinks[0] if kinks else [s for s in sites if isinstance(s, TangencyRemoval)][0]
        d = apply_move(d, event)
        events.append(event)


def _excursion(d: PlanarDiagram, rng: Random, depth: int, headroom: int) -> tuple:
    events = []
    limit = d.n_crossings + headroom
    for _ in range(depth):
        sites = find_move_sites(d, DOODLE_KINDS)
        local = [s for s in sites if crossing_change(s) <= 0]
        grow = [s for s in sites if 0 < crossing_change(s) <= limit - d.n_crossings]
        pool = local if local and (rng.random() < 0.5 or not grow) else grow
        if not pool:
            break
        event = rng.choice(pool)
        d = apply_move(d, event)
        events.append(event)
    return d, events


def simplify(d: PlanarDiagram, budget: int = 1000, seed: int = 0, max_depth: int = 3, headroom: int = 2,
             plateau: float = 0.25, verbose: bool = False) -> SimplifyResult:
    """
    Greedy reduction followed by randomized excursions.

    Every excursion makes up to max_depth random kink and tangency moves (removals, or creations keeping the
    crossing count within headroom of the current best) and reduces greedily. Triangle moves are never used, so the
    result stays in the doodle class of d. An excursion is kept only when the result has fewer crossings, or with
    probability `plateau` when it ties. Warns when the budget runs out before the circle is reached.
    """
    rng = Random(seed)
    best, events = greedy_reduce(d)
    attempts = 0
    while best.n_crossings and attempts < budget:
        attempts += 1
        walked, walk_events = _excursion(best, rng, rng.randint(1, max_depth), headroom)
        reduced, reduce_events = greedy_reduce(walked)
        lower = reduced.n_crossings < best.n_crossings
        if lower or (reduced.n_crossings == best.n_crossings and rng.random() < plateau):
            best = reduced
            events.extend(walk_events + reduce_events)
            if verbose and lower:
                print(f'attempt {attempts}: {best.n_crossings} crossings')
    if best.n_crossings:
        warnings.warn(
            f'simplification budget of {budget} excursions exhausted at {best.n_crossings} crossings',
            category=RuntimeWarning
        )
    return SimplifyResult(best, events, best.n_crossings == 0, attempts)
