"""
The four perturbations of the two-triple-point quasidoodle realizing the clique ABABAB.
"""
from itertools import product

import pandas as pd

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.moves.realize import realize_class
from doodlinv.moves.resolution import resolve_vertex
from doodlinv.moves.traces import simplify

MERKOV_CODE = 'ABABAB'


def merkov_candidates(seed: int = 0) -> list:
    """
    Returns
    -------
    list of 4 (sides, PlanarDiagram), sides a pair of '+' | '-' for the two triple points
    """
    realization = realize_class(CliqueClass.from_code(MERKOV_CODE), seed)
    q = realization.quasidoodle
    first, second = realization.centers[0], realization.centers[1]
    out = []
    for sides in product('+-', repeat=2):
        resolved = resolve_vertex(resolve_vertex(q, first, sides[0]), second, sides[1])
        out.append((sides, resolved.to_diagram()))
    return out


def merkov_search(budget: int = 1000, seed: int = 0, verbose: bool = False) -> pd.DataFrame:
    """
    Simplifies every candidate with a randomized move search.

    A candidate that keeps crossings is only heuristic evidence of nontriviality.
    """
    rows = []
    for sides, d in merkov_candidates(seed):
        result = simplify(d, budget=budget, seed=seed, verbose=verbose)
        rows.append({
            'sides': ''.join(sides),
            'crossings': d.n_crossings,
            'simplified_crossings': result.diagram.n_crossings,
            'reached_circle': result.reached_circle,
            'attempts': result.attempts,
        })
    return pd.DataFrame(rows)
