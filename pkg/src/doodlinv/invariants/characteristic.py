"""
Characteristic numbers of invariants on quasidoodles and empirical order tests.
"""
from dataclasses import dataclass
import threading
import warnings

import pandas as pd

from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes
from doodlinv.cliques.modes import degeneration_modes, number_of_steps
from doodlinv.errors import SymbolInconsistent, ValidationError
from doodlinv.invariants.moments import moment
from doodlinv.moves.quasidoodle import DegenerationProcess, Quasidoodle
from doodlinv.moves.realize import distinct_realizations, realize_class
from doodlinv.moves.resolution import resolve_last


class Evaluator:
    """
    An invariant of regular diagrams, memoized on canonical forms.

    Attributes
    ----------
    f: callable PlanarDiagram -> int
    name: str
    order: claimed order, or None
    """
    def __init__(self, f, name: str = None, order: int = None):
        self.f = f
        self.name = name or getattr(f, '__name__', 'f')
        self.order = order
        self._memo = {}
        self._lock = threading.Lock()

    def __call__(self, d) -> int:
        key = d.canonical_key
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = int(self.f(d))
        with self._lock:
            self._memo[key] = value
        return value

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def __repr__(self) -> str:
        return f'Evaluator({self.name}, order={self.order})'


def moment_evaluator(beta: int) -> Evaluator:
    return Evaluator(lambda d: moment(d, None, beta), f'M({beta})', beta + 1)


def characteristic_number(f: Evaluator, q: Quasidoodle, dp: DegenerationProcess) -> int:
    """
    f itself at complexity 0, otherwise the number at the positive resolution of the last step minus the number at
    the negative one.
    """
    if q.complexity == 0:
        if len(dp):
            raise ValidationError(f'a regular diagram has no multiple points, the process has {len(dp)} steps')
        return f(q.to_diagram())
    plus, minus = resolve_last(q, dp)
    rest = dp.without_last()
    return characteristic_number(f, plus, rest) - characteristic_number(f, minus, rest)


@dataclass
class OrderTestReport:
    """
    Attributes
    ----------
    evaluator: name of the invariant
    order: order tested
    table: DataFrame with one row per (class, realization, marking order)
    passed: True iff every characteristic number is zero
    """
    evaluator: str
    order: int
    table: pd.DataFrame
    passed: bool

    def to_dict(self) -> dict:
        return {
            'evaluator': self.evaluator, 'order': self.order, 'passed': self.passed,
            'rows': self.table.to_dict(orient='records'),
        }


def order_upper_test(f: Evaluator, j: int, classes=None, realizations: int = 1, seed: int = 0,
                     verbose: bool = False) -> OrderTestReport:
    """
    Characteristic numbers of f on realizations of the configuration classes of complexity j + 1.

    Parameters
    ----------
    f - Evaluator
    j - order claimed
    classes - list of CliqueClass or codes, default every configuration of complexity j + 1
    realizations - realizations per class
    seed - first realization seed

    Returns
    -------
    OrderTestReport; f passes when every number vanishes. Sides of the steps do not enter the numbers, so every
    marking order is evaluated once and stands for its modes x 2^steps processes.
    """
    if classes is None:
        classes = enumerate_classes(3, max_complexity=j + 1, min_complexity=j + 1)
    classes = [CliqueClass.from_code(c) if isinstance(c, str) else c for c in classes]
    rows = []
    for cls in classes:
        if cls.complexity != j + 1:
            raise ValidationError(f'class {cls.code} has complexity {cls.complexity}, the test needs {j + 1}')
        modes = degeneration_modes(cls)
        for r in range(realizations):
            realization = realize_class(cls, seed + r)
            for m, mode in enumerate(modes):
                value = characteristic_number(f, realization.quasidoodle, realization.process(mode))
                rows.append({
                    'class': cls.code, 'realization': realization.seed, 'mode': m,
                    'processes': 2**number_of_steps(cls), 'value': value,
                })
        if verbose:
            print(f'{cls.code}: {len(modes)} modes x {realizations} realizations')
    table = pd.DataFrame(rows, columns=['class', 'realization', 'mode', 'processes', 'value'])
    return OrderTestReport(f.name, j, table, bool((table['value'] == 0).all()))


def top_symbol(f: Evaluator, cls, mode=0, count: int = 3, seed: int = 0) -> int:
    """
    The characteristic number of f on a configuration class of complexity equal to its order, for one marking order.

    Parameters
    ----------
    f - Evaluator of order cls.complexity
    cls - CliqueClass or code
    mode - marking order, or its position in degeneration_modes(cls)
    count - realizations compared
    """
    cls = CliqueClass.from_code(cls) if isinstance(cls, str) else cls
    if f.order is not None and f.order != cls.complexity:
        raise ValidationError(f'{f.name} has order {f.order}, class {cls.code} has complexity {cls.complexity}')
    if isinstance(mode, int):
        mode = degeneration_modes(cls)[mode]
    realizations = distinct_realizations(cls, count, seed)
    if len(realizations) < count:
        warnings.warn(f'only {len(realizations)} distinct realizations of {cls.code} found', category=RuntimeWarning)
    values = {characteristic_number(f, r.quasidoodle, r.process(mode)) for r in realizations}
    if len(values) != 1:
        raise SymbolInconsistent(f'realizations of {cls.code} give characteristic numbers {sorted(values)}')
    return values.pop()
