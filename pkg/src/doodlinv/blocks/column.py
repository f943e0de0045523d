"""
Columns of the main filtration: all blocks of one complexity assembled into a single cellular chain complex.

The space of cliques of a class is cut at a base point of the circle. A linear word L (the class read from the
base point) gives two base cells: sigma_L with no point at the base point (dimension rho) and tau_L with the first
point at the base point (dimension rho - 1). A cell of the column is a base cell times a relative fiber simplex of
L, in relative degree base dimension + fiber dimension - codim.

Differential of sigma_L x:
    (-1)^rho sigma_L dx - tau_L x + sum_i (-1)^(i+1) sigma_L' c_i(x) + (-1)^(rho+1) tau_rot(L) rot(x)
Differential of tau_L x:
    (-1)^(rho-1) tau_L dx + sum_j (-1)^j tau_L' c_j(x) + (-1)^rho tau_L' c_wrap(x)
where c_i collides positions i-1 and i and rot moves the last point to the front. Faces leaving the column
(illegal collisions, classes outside the column, marginal or degenerate images) vanish.

Two disjoint cross-group collisions joining the same groups meet along a mixed stratum (see complexes.mixed). Its
cells are the corner cell C of the doubly collided word times the ratio interval I times a fiber chain y, with
    d(C x I x y) = dC x I x y + (-1)^dim C (C x {1} - C x {0}) x y + (-1)^(dim C + 1) C x I x dy.
For gaps a < b of a base simplex of dimension N the corner enters the boundary with sign (-1)^(a+b+N+1).
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from time import time

import pandas as pd

from doodlinv._tools import time_elapsed
from doodlinv.blocks.block import block, block_top_homology
from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes, slots_to_code
from doodlinv.complexes.collision import collide, map_chain, rotate_word
from doodlinv.complexes.mixed import corner_chains, corner_end, corner_image, corner_orbit, mixed_corner, \
    rotate_corner
from doodlinv.complexes.order_complex import relative_boundary, relative_simplices
from doodlinv.complexes.poset import element_code, poset_of_word
from doodlinv.errors import IllegalCollision, UnsupportedArity, ValidationError
from doodlinv.homology.chain_homology import ChainComplex, GroupPresentation
from doodlinv.paths import ring_name

CONTEXTS = ('doodle', 'idoodle', 'fourfold')
MIXED = ('ms', 'mt')


def column_classes(p: int, k: int = 3, context: str = 'doodle', max_double_points: int = None) -> list:
    """
    Classes of complexity p making up the column.

    Parameters
    ----------
    p - int, complexity
    k - int, arity
    context - 'doodle' (all multiplicities), 'idoodle' (configurations) or 'fourfold' (k=4 configurations)
    max_double_points - bound on coincidences for the doodle context, default 1 for p >= 4 and unbounded below
    """
    if context not in CONTEXTS:
        raise ValidationError(f'unknown context {context!r}, use one of {CONTEXTS}')
    if context == 'fourfold' and k != 4:
        raise UnsupportedArity(f'the fourfold context needs arity 4, got {k}')
    if k == 4 or context == 'idoodle':
        max_double_points = 0
    elif max_double_points is None:
        max_double_points = 1 if p >= 4 else 2*p
    return enumerate_classes(k, max_complexity=p, min_complexity=p, max_double_points=max_double_points)


def _class_of(word: tuple, k: int) -> CliqueClass:
    return CliqueClass.from_slots(word, k)


@lru_cache(maxsize=None)
def face_classes(cls: CliqueClass) -> frozenset:
    """Classes reached from cls by one legal collision of adjacent points."""
    out = set()
    for word in cls.words:
        moves = [(i, False) for i in range(len(word) - 1)] + ([(0, True)] if len(word) > 1 else [])
        for i, wrap in moves:
            try:
                out.add(_class_of(collide(word, i, cls.k, wrap).word, cls.k))
            except IllegalCollision:
                continue
    return frozenset(out)


def is_locally_closed(classes) -> bool:
    """True when no class outside the set lies between two classes of the set in the closure order."""
    members = set(classes)
    memo = {}

    def descendants(cls):
        if cls not in memo:
            out = set()
            for face in face_classes(cls):
                out.add(face)
                out |= descendants(face)
            memo[cls] = frozenset(out)
        return memo[cls]

    return not any(between not in members and descendants(between) & members
                   for cls in members for between in descendants(cls))


def _corners(word: tuple, k: int, base: str):
    """Mixed corners of a base cell; the wrap pair is a face of tau cells only."""
    lefts = range(len(word) - 1) if base == 's' else range(len(word))
    for first, second in combinations(lefts, 2):
        corner = mixed_corner(word, first, second, k)
        if corner is not None:
            yield corner


def _corner_sign(corner, rho: int, base: str) -> int:
    a, b = corner.pairs
    sign = (-1)**(a + b + rho + 1) if base == 's' else (-1)**(a + b + rho)
    return -sign if corner.flipped else sign


def _mixed_strata(classes, members: set, k: int) -> set:
    """Corner keys of every mixed stratum lying between a member class and a member end."""
    out = set()
    for cls in classes:
        for word in cls.words:
            for corner in _corners(word, k, 's'):
                ends = [corner_end(corner.key, end, k) for end in (0, 1)]
                if any(e is not None and _class_of(e, k) in members for e in ends):
                    out.update(corner_orbit(corner.key))
    return out


def column_complex(classes, k: int = None, p: int = None) -> ChainComplex:
    """
    The cellular chain complex of the union of the blocks of classes.

    classes must be locally closed in the column (any union of strata with coincidence counts in an interval is).
    Cells are keys ('s' | 't', word, fiber simplex) and ('ms' | 'mt', mixed corner key, fiber chain).
    """
    classes = list(classes)
    if not classes:
        return ChainComplex()
    k = classes[0].k if k is None else k
    p = classes[0].complexity if p is None else p
    members = set(classes)
    if not is_locally_closed(members):
        raise ValidationError(f'classes {sorted(c.code for c in members)} are not locally closed in the column')
    mixed = _mixed_strata(classes, members, k)
    if mixed and any(cls.coincidences > 1 for cls in classes):
        raise UnsupportedArity('mixed limits next to classes with two or more coincidences are not modeled')
    complex_ = ChainComplex()
    chains = {}
    for cls in classes:
        for word in cls.words:
            for d, simplices in relative_simplices(word, k).items():
                chains.setdefault(word, set()).update(simplices)
                for x in simplices:
                    complex_.add_cell(cls.rho + d - 2*p, ('s', word, x))
                    complex_.add_cell(cls.rho - 1 + d - 2*p, ('t', word, x))
    mixed_chains = {}
    for key in mixed:
        for d, simplices in corner_chains(key[0], k).items():
            mixed_chains.setdefault(key, set()).update(simplices)
            for y in simplices:
                complex_.add_cell(len(key[0]) + 1 + d - 2*p, ('ms', key, y))
                complex_.add_cell(len(key[0]) + d - 2*p, ('mt', key, y))

    def add_collision(degree, source, kind, word, x, i, wrap, sign):
        try:
            result = collide(word, i, k, wrap)
        except IllegalCollision:
            return
        if _class_of(result.word, k) not in members:
            return
        image = map_chain(x, result.position_map)
        if image is None or image not in chains[result.word]:
            return
        complex_.add_incidence(degree, (kind, result.word, image), source, sign)

    def add_corner(degree, source, base, word, x, corner):
        if corner.key not in mixed:
            return
        image = corner_image(x, word, corner)
        if image is None or image not in mixed_chains[corner.key]:
            return
        complex_.add_incidence(degree, ('m' + base, corner.key, image), source, _corner_sign(corner, len(word), base))

    for cls in classes:
        rho = cls.rho
        for word in cls.words:
            rotated, rotation = rotate_word(word)
            corners = {base: list(_corners(word, k, base)) if mixed else [] for base in 'st'}
            for x in sorted(chains[word]):
                q = len(x) - 1
                degree = rho + q - 2*p
                sigma = ('s', word, x)
                for sign, face in relative_boundary(x):
                    complex_.add_incidence(degree, ('s', word, face), sigma, (-1)**rho*sign)
                complex_.add_incidence(degree, ('t', word, x), sigma, -1)
                for i in range(1, rho):
                    add_collision(degree, sigma, 's', word, x, i - 1, False, (-1)**(i + 1))
                image = map_chain(x, rotation)
                complex_.add_incidence(degree, ('t', rotated, image), sigma, (-1)**(rho + 1))
                for corner in corners['s']:
                    add_corner(degree, sigma, 's', word, x, corner)
                tau = ('t', word, x)
                for sign, face in relative_boundary(x):
                    complex_.add_incidence(degree - 1, ('t', word, face), tau, (-1)**(rho - 1)*sign)
                for j in range(1, rho):
                    add_collision(degree - 1, tau, 't', word, x, j - 1, False, (-1)**j)
                if rho > 1:
                    add_collision(degree - 1, tau, 't', word, x, 0, True, (-1)**rho)
                for corner in corners['t']:
                    add_corner(degree - 1, tau, 't', word, x, corner)

    for key in sorted(mixed):
        c = len(key[0])
        rotated, rotation, flipped = rotate_corner(key)
        ends = []
        for end, sign in ((0, -1), (1, 1)):
            word_end = corner_end(key, end, k)
            if word_end is not None and word_end in chains:
                ends.append((word_end, poset_of_word(word_end, k).chi, sign))
        for y in sorted(mixed_chains[key]):
            degree = c + 1 + len(y) - 2*p
            sigma, tau = ('ms', key, y), ('mt', key, y)
            for i in range(len(y)):
                face = y[:i] + y[i + 1:]
                complex_.add_incidence(degree, ('ms', key, face), sigma, (-1)**(c + 1 + i))
                complex_.add_incidence(degree - 1, ('mt', key, face), tau, (-1)**(c + i))
            complex_.add_incidence(degree, tau, sigma, -1)
            complex_.add_incidence(degree, ('mt', rotated, map_chain(y, rotation)), sigma,
                                   (-1)**(c + 1)*(-1 if flipped else 1))
            for word_end, top, sign in ends:
                z = y + (top,)
                if z not in chains[word_end]:
                    continue
                complex_.add_incidence(degree, ('s', word_end, z), sigma, sign*(-1)**c)
                complex_.add_incidence(degree - 1, ('t', word_end, z), tau, sign*(-1)**(c - 1))
    for degree in complex_.cells:
        complex_.cells[degree] = sorted(complex_.cells[degree])
    return complex_


def cell_code(cell) -> str:
    kind, word, x = cell
    base = 'sigma' if kind in ('s', 'ms') else 'tau'
    if kind in MIXED:
        word, marks, sign = word
        vertices = [element_code(S, word) for S in x] + [f'mixed{"+" if sign > 0 else "-"}{marks[0]},{marks[1]}']
        return f'{base}[{slots_to_code(word)}] ' + ' < '.join(vertices)
    return f'{base}[{slots_to_code(word)}] ' + ' < '.join(element_code(S, word) for S in x)


def cell_class(cell, k: int = 3) -> str:
    """Code of the class a cell lies over; mixed cells are named by their corner word."""
    kind, word, _ = cell
    if kind in MIXED:
        return 'mixed ' + CliqueClass.from_slots(word[0], k).code
    return CliqueClass.from_slots(word, k).code


@dataclass
class ColumnReport:
    """
    Attributes
    ----------
    p: main filtration index (complexity)
    k: arity
    context: doodle, idoodle or fourfold
    ring: 0 for Z or a prime
    groups: relative degree -> GroupPresentation
    generators: cycles at the top degree, as lists of (cell description, coefficient) with their classes
    block_groups: class code -> Wang groups of the single block
    assumptions: conditions the report relies on
    """
    p: int
    k: int
    context: str
    ring: int
    groups: dict
    generators: list = field(default_factory=list)
    block_groups: dict = field(default_factory=dict)
    classes: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    @property
    def top_degree(self) -> int:
        return max(self.groups) if self.groups else None

    def group(self, degree: int):
        return self.groups.get(degree, GroupPresentation(0, (), self.ring))

    def to_frame(self) -> pd.DataFrame:
        rows = [{'degree': d, 'group': str(g), 'free_rank': g.free_rank, 'torsion': list(g.torsion)}
                for d, g in sorted(self.groups.items(), reverse=True)]
        return pd.DataFrame(rows, columns=['degree', 'group', 'free_rank', 'torsion'])

    def to_dict(self) -> dict:
        return {
            'p': self.p, 'k': self.k, 'context': self.context, 'ring': ring_name(self.ring),
            'classes': list(self.classes),
            'groups': {str(d): g.to_dict() for d, g in sorted(self.groups.items(), reverse=True)},
            'generators': self.generators,
            'block_groups': {code: h.to_dict() for code, h in sorted(self.block_groups.items())},
            'assumptions': list(self.assumptions),
        }


def top_generators(complex_: ChainComplex, degree: int, k: int = 3, ring: int = 0) -> list:
    """Kernel basis at a degree without cells above it, described cell by cell."""
    if complex_.cells.get(degree + 1):
        return []
    basis = complex_.kernel_lattice(degree, ring)
    cells = complex_.cells.get(degree, [])
    out = []
    for i in range(basis.shape[1]):
        support = [(cells[j], int(basis[j, i])) for j in range(len(cells)) if basis[j, i] != 0]
        out.append({
            'classes': sorted({cell_class(cell, k) for cell, _ in support}),
            'chain': [[cell_code(cell), value] for cell, value in support],
        })
    return out


def auxiliary_column(p: int, k: int = 3, context: str = 'doodle', ring: int = 0, max_double_points: int = None,
                     verbose: bool = False) -> ColumnReport:
    """
    Assembles column p and computes its homology.

    Parameters
    ----------
    p - int, complexity of the column
    k - int, arity (3, or 4 for the fourfold context)
    context - str, one of CONTEXTS
    ring - int, 0 for Z or a prime p
    max_double_points - int, optional bound on coincidences (doodle context)
    verbose - bool, print timings

    Returns
    -------
    ColumnReport
    """
    if k == 4:
        context = 'fourfold'
    if k == 3 and context == 'doodle' and p > 4:
        raise UnsupportedArity(f'doodle columns are supported up to p=4, got p={p}: '
                               'lower elements of mixed limits are not modeled')
    s = time()
    classes = column_classes(p, k, context, max_double_points)
    complex_ = column_complex(classes, k, p)
    complex_.check()
    if verbose:
        print(f'column p={p} ({context}): {len(classes)} classes, '
              f'{sum(len(c) for c in complex_.cells.values())} cells')
        time_elapsed(s, 2)
    groups = complex_.homology(ring)
    assumptions = ['vector bundle factors are orientation-trivial along monodromy loops']
    if context == 'doodle' and p >= 4 and (max_double_points is None or max_double_points < 2*p):
        assumptions.append('classes with two or more coincidences are left out of the column')
    block_groups = {cls.code: block_top_homology(block(cls), ring) for cls in classes}
    top = max(complex_.cells) if complex_.cells else None
    generators = top_generators(complex_, top, k, ring) if top is not None else []
    if verbose:
        time_elapsed(s, 2)
    return ColumnReport(p, k, context, ring, groups, generators, block_groups,
                        [cls.code for cls in classes], assumptions)


def column_of_classes(codes, k: int = 3, ring: int = 0) -> dict:
    """Homology of the sub-column spanned by the given class codes."""
    classes = [CliqueClass.from_code(code, k) for code in codes]
    complex_ = column_complex(classes, k)
    complex_.check()
    return complex_.homology(ring)
