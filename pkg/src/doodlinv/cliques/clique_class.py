"""
A-cliques up to orientation-preserving diffeomorphisms of the circle.

A clique is stored as a cyclic sequence of slots (group, multiplicity): the geometrically distinct points of the
circle in their cyclic order, each carrying the group it belongs to and how many clique points coincide there.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from math import comb

from doodlinv.errors import ValidationError, UnsupportedArity

LETTERS = 'ABCDEFGHIJ'


def relabel(slots) -> tuple:
    """Renames groups 0, 1, 2, ... in order of first appearance."""
    names = {}
    return tuple((names.setdefault(g, len(names)), m) for g, m in slots)


def rotate(slots, r: int) -> tuple:
    r %= max(len(slots), 1)
    return tuple(slots[r:]) + tuple(slots[:r])


def canonical_slots(slots) -> tuple:
    slots = tuple(slots)
    if not slots:
        return ()
    return min(relabel(rotate(slots, r)) for r in range(len(slots)))


def slots_to_code(slots) -> str:
    return ''.join(LETTERS[g] + (str(m) if m > 1 else '') for g, m in slots)


def code_to_slots(code: str) -> tuple:
    slots = []
    for char in code.replace(' ', '').replace(',', ''):
        if char.isdigit():
            if not slots:
                raise ValidationError(f'clique code {code!r} starts with a multiplicity')
            slots[-1] = (slots[-1][0], int(char))
        elif char.upper() in LETTERS:
            slots.append((LETTERS.index(char.upper()), 1))
        else:
            raise ValidationError(f'unexpected character {char!r} in clique code {code!r}')
    return tuple(slots)


@dataclass(frozen=True)
class CliqueClass:
    """
    Equivalence class of A-cliques, stored in canonical form.

    Attributes
    ----------
    slots: tuple of (group, multiplicity), the lexicographically minimal rotation after relabeling
    k: arity of the theory (3 for triple points, 4 for 4-fold points)

    Properties
    ----------
    series: group sizes a_1 >= a_2 >= ...
    size: |A|, number of points counted with multiplicity
    num_groups: #A
    complexity: |A| - #A
    rho: number of geometrically distinct points
    coincidences: |A| - rho
    """
    slots: tuple
    k: int = 3

    def __post_init__(self):
        if self.k not in (3, 4):
            raise UnsupportedArity(f'arity {self.k} is not supported, use 3 or 4')
        if canonical_slots(self.slots) != tuple(self.slots):
            raise ValidationError(f'{self.slots} is not in canonical form, use CliqueClass.from_slots')
        for g, m in self.slots:
            if not 1 <= m <= 3 or (self.k == 4 and m != 1):
                raise ValidationError(f'multiplicity {m} is not allowed for arity {self.k}')
        for size in self.group_sizes:
            if size < self.k:
                raise ValidationError(f'group of size {size} is smaller than the arity {self.k}')

    @classmethod
    def from_slots(cls, slots, k: int = 3) -> 'CliqueClass':
        return cls(canonical_slots(slots), k)

    @classmethod
    def from_code(cls, code: str, k: int = 3) -> 'CliqueClass':
        return cls.from_slots(code_to_slots(code), k)

    @cached_property
    def group_sizes(self) -> tuple:
        sizes = {}
        for g, m in self.slots:
            sizes[g] = sizes.get(g, 0) + m
        return tuple(sizes[g] for g in sorted(sizes))

    @property
    def series(self) -> tuple:
        return tuple(sorted(self.group_sizes, reverse=True))

    @property
    def size(self) -> int:
        return sum(self.group_sizes)

    @property
    def num_groups(self) -> int:
        return len(self.group_sizes)

    @property
    def complexity(self) -> int:
        return self.size - self.num_groups

    @property
    def codim(self) -> int:
        return 2*self.complexity

    @property
    def rho(self) -> int:
        return len(self.slots)

    @property
    def coincidences(self) -> int:
        return self.size - self.rho

    @property
    def is_configuration(self) -> bool:
        return self.coincidences == 0

    @property
    def code(self) -> str:
        return slots_to_code(self.slots)

    @cached_property
    def symmetry_shift(self) -> int:
        """Smallest r > 0 such that rotating the slots by r gives the same class (rho if there is none)."""
        base = relabel(self.slots)
        for r in range(1, self.rho):
            if relabel(rotate(self.slots, r)) == base:
                return r
        return self.rho

    @cached_property
    def words(self) -> tuple:
        """The distinct linear words (cuts of the circle), each relabeled by first appearance."""
        return tuple(sorted({relabel(rotate(self.slots, r)) for r in range(self.rho)}))

    def to_dict(self) -> dict:
        return {
            'code': self.code, 'k': self.k, 'series': list(self.series), 'rho': self.rho,
            'complexity': self.complexity, 'codim': self.codim, 'coincidences': self.coincidences,
        }

    def __str__(self) -> str:
        return self.code


def codim(cls: CliqueClass) -> int:
    return cls.codim


def _series(k: int, max_complexity: int, min_complexity: int) -> list:
    out = []

    def extend(parts, remaining, largest):
        total = sum(p - 1 for p in parts)
        if parts and total >= min_complexity:
            out.append(tuple(parts))
        for a in range(min(largest, remaining + 1), k - 1, -1):
            extend(parts + [a], remaining - (a - 1), a)

    extend([], max_complexity, max_complexity + 1)
    return out


def _multiplicity_patterns(a: int, max_multiplicity: int, max_coincidences: int) -> list:
    """Multisets of slot multiplicities summing to a, as sorted tuples."""
    out = []

    def extend(parts, remaining, largest):
        if remaining == 0:
            if a - len(parts) <= max_coincidences:
                out.append(tuple(parts))
            return
        for m in range(min(largest, remaining), 0, -1):
            extend(parts + [m], remaining - m, m)

    extend([], a, max_multiplicity)
    return out


def enumerate_classes(k: int = 3, max_complexity: int = 4, max_double_points: int = 0,
                      min_complexity: int = 1, exact_double_points: bool = False) -> list:
    """
    All clique classes of arity k with complexity in [min_complexity, max_complexity].

    Parameters
    ----------
    k - int, arity (3 or 4)
    max_double_points - int, bound on coincidences |A| - rho (0 lists configurations only; forced to 0 for k=4)
    exact_double_points - bool, keep only classes with exactly max_double_points coincidences

    Returns
    -------
    list of CliqueClass sorted by (complexity, rho, code)
    """
    if k not in (3, 4):
        raise UnsupportedArity(f'arity {k} is not supported, use 3 or 4')
    max_multiplicity = 3 if k == 3 else 1
    max_double_points = max_double_points if k == 3 else 0
    found = set()
    for series in _series(k, max_complexity, min_complexity):
        per_group = [_multiplicity_patterns(a, max_multiplicity, max_double_points) for a in series]

        def choose(g, chosen):
            if g == len(series):
                slots = [(i, m) for i, pattern in enumerate(chosen) for m in pattern]
                if sum(series) - len(slots) > max_double_points:
                    return
                for arrangement in set(permutations(slots)):
                    found.add(canonical_slots(arrangement))
                return
            for pattern in per_group[g]:
                choose(g + 1, chosen + [pattern])

        choose(0, [])
    classes = [CliqueClass(slots, k) for slots in found]
    if exact_double_points:
        classes = [c for c in classes if c.coincidences == max_double_points]
    return sorted(classes, key=lambda c: (c.complexity, c.rho, c.code))


def single_group_mode_count(a: int, k: int = 3) -> int:
    """C(a, k)·(a - k)!, the number of degeneration modes of one group of a points."""
    out = comb(a, k)
    for i in range(2, a - k + 1):
        out *= i
    return out
