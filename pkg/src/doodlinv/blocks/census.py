"""
Counts of finite-order invariants and of low-dimensional cohomology read off the columns.
"""
from dataclasses import dataclass, field
import warnings

import pandas as pd

from doodlinv.blocks.column import auxiliary_column
from doodlinv.errors import ValidationError
from doodlinv.homology.chain_homology import GroupPresentation
from doodlinv.paths import ring_name

CENSUS_CONTEXTS = {
    'doodle-invariants': ('doodle', 3, -1),
    'idoodle-invariants': ('idoodle', 3, -1),
    'fourfold-H1': ('fourfold', 4, -2),
}
ALIASES = {'doodle': 'doodle-invariants', 'idoodle': 'idoodle-invariants', 'fourfold': 'fourfold-H1'}

ASSUMPTIONS = {
    'doodle-invariants': [
        'the main spectral sequence has no differentials reaching relative degree -1 below order 5',
        'classes with two or more coincidences do not contribute at order 4',
    ],
    'idoodle-invariants': [
        'the main spectral sequence of immersed doodles degenerates at E1',
        'order-n invariants are counted as the free rank of column n in relative degree -1',
    ],
    'fourfold-H1': [
        'F_d/F_(d-1) is column d in relative degree -2, with no extension or differential between columns',
    ],
}


@dataclass
class CensusReport:
    """
    Attributes
    ----------
    context: one of CENSUS_CONTEXTS
    ring: 0 for Z or a prime
    groups: order -> GroupPresentation
    assumptions: conditions the counts rely on
    """
    context: str
    ring: int
    groups: dict
    assumptions: list = field(default_factory=list)

    @property
    def counts(self) -> tuple:
        """Free ranks per order, in increasing order."""
        return tuple(self.groups[d].free_rank for d in sorted(self.groups))

    @property
    def table(self) -> pd.DataFrame:
        rows = [{'order': d, 'group': str(g), 'free_rank': g.free_rank, 'torsion': list(g.torsion)}
                for d, g in sorted(self.groups.items())]
        return pd.DataFrame(rows, columns=['order', 'group', 'free_rank', 'torsion'])

    def to_dict(self) -> dict:
        return {
            'context': self.context, 'ring': ring_name(self.ring),
            'orders': {str(d): g.to_dict() for d, g in sorted(self.groups.items())},
            'assumptions': list(self.assumptions),
        }


def census(context: str = 'doodle-invariants', max_order: int = None, ring: int = 0, min_order: int = 1,
           verbose: bool = False) -> CensusReport:
    """
    Group per order for one census context.

    Parameters
    ----------
    context - 'doodle-invariants', 'idoodle-invariants' or 'fourfold-H1' (short names doodle, idoodle, fourfold)
    max_order - int, last order, default 4 for invariants and 5 for fourfold-H1
    ring - int, 0 for Z or a prime
    min_order - int, first order

    Returns
    -------
    CensusReport
    """
    context = ALIASES.get(context, context)
    if context not in CENSUS_CONTEXTS:
        raise ValidationError(f'unknown census context {context!r}, use one of {sorted(CENSUS_CONTEXTS)}')
    column_context, k, degree = CENSUS_CONTEXTS[context]
    max_order = (5 if k == 4 else 4) if max_order is None else max_order
    if k == 3 and max_order > 5:
        raise ValidationError(f'invariant censuses are supported up to order 5, got {max_order}')
    groups = {}
    for order in range(min_order, max_order + 1):
        report = auxiliary_column(order, k, column_context, ring, verbose=verbose)
        groups[order] = report.groups.get(degree, GroupPresentation(0, (), ring))
    warnings.warn(f'census {context} relies on: ' + '; '.join(ASSUMPTIONS[context]), category=RuntimeWarning)
    return CensusReport(context, ring, groups, list(ASSUMPTIONS[context]))
