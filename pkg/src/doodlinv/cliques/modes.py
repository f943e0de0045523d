"""
Degeneration modes of configurations and the connectivity test for marginal faces.
"""
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.errors import ValidationError


@dataclass(frozen=True)
class FormTuple:
    """Marks k points of a group that has no marked points yet."""
    group: int
    points: frozenset


@dataclass(frozen=True)
class JoinPoint:
    """Marks one more point of a group that already has at least k marked points."""
    group: int
    point: int


def group_points(cls: CliqueClass) -> dict:
    """Slot positions of each group; for configurations the points are the slots."""
    out = {}
    for position, (g, _) in enumerate(cls.slots):
        out.setdefault(g, []).append(position)
    return out


def degeneration_modes(cls: CliqueClass) -> list:
    """
    All marking orders of the points of a configuration, as tuples of FormTuple / JoinPoint steps.

    Steps of different groups are kept in the order they are marked, so interleavings count separately.
    """
    if not cls.is_configuration:
        raise ValidationError(f'degeneration modes are defined for configurations, {cls.code} has coincidences')
    return marking_orders(group_points(cls), cls.k)


def marking_orders(points: dict, k: int = 3) -> list:
    """
    Marking orders of arbitrary groups of points.

    Parameters
    ----------
    points - dict group -> list of points (any sortable ids)
    k - size of the first marked tuple of every group

    Returns
    -------
    list of tuples of FormTuple / JoinPoint steps
    """
    modes = []

    def extend(prefix, marked):
        if all(len(marked[g]) == len(points[g]) for g in points):
            modes.append(tuple(prefix))
            return
        for g in points:
            unmarked = [p for p in points[g] if p not in marked[g]]
            if not unmarked:
                continue
            if not marked[g]:
                for chosen in combinations(unmarked, k):
                    marked[g] = frozenset(chosen)
                    extend(prefix + [FormTuple(g, frozenset(chosen))], marked)
                    marked[g] = frozenset()
            else:
                for p in unmarked:
                    previous = marked[g]
                    marked[g] = previous | {p}
                    extend(prefix + [JoinPoint(g, p)], marked)
                    marked[g] = previous

    extend([], {g: frozenset() for g in points})
    return modes


def number_of_steps(cls: CliqueClass) -> int:
    return sum(a - cls.k + 1 for a in cls.group_sizes)


def degeneration_process_count(cls: CliqueClass) -> int:
    """modes × 2^steps: every step is approached from one of two sides."""
    return len(degeneration_modes(cls))*2**number_of_steps(cls)


def hypergraph_connected(a: int, edges) -> bool:
    """
    True iff the hyperedges cover all points 1..a and form one connected hypergraph.

    Parameters
    ----------
    a - int, group size
    edges - iterable of k-subsets of {1, ..., a}
    """
    graph = nx.Graph()
    graph.add_nodes_from(('point', i) for i in range(1, a + 1))
    for n, edge in enumerate(edges):
        for i in edge:
            if not 1 <= i <= a:
                raise ValidationError(f'hyperedge {sorted(edge)} has a point outside 1..{a}')
            graph.add_edge(('edge', n), ('point', i))
    if any(graph.degree(('point', i)) == 0 for i in range(1, a + 1)):
        return False
    return nx.is_connected(graph)
