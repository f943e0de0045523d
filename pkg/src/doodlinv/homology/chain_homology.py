from dataclasses import dataclass, field

import numpy as np

from doodlinv.errors import NotAComplex, ValidationError
from doodlinv.homology.smith import SNF, as_int_matrix, rank_mod_p, nullspace_mod_p
from doodlinv.paths import ring_name


@dataclass(frozen=True)
class GroupPresentation:
    """
    A finitely generated abelian group Z^free_rank + Z/d_1 + ... over Z (ring=0),
    or a vector space of dimension free_rank over Z/p (ring=p, torsion empty).
    """
    free_rank: int = 0
    torsion: tuple = ()
    ring: int = 0

    def __post_init__(self):
        if any(d < 2 for d in self.torsion):
            raise ValidationError(f'torsion coefficients must be >= 2, got {self.torsion}')
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValidationError(f'torsion coefficients {self.torsion} do not form a divisibility chain')
        if self.ring and self.torsion:
            raise ValidationError('groups over Z/p carry no torsion coefficients')

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion), 'ring': ring_name(self.ring)}

    @classmethod
    def from_dict(cls, data: dict) -> 'GroupPresentation':
        ring = data.get('ring', 'Z')
        p = 0 if ring == 'Z' else int(str(ring)[1:])
        return cls(int(data['free_rank']), tuple(int(d) for d in data.get('torsion', [])), p)

    def __str__(self) -> str:
        base = ring_name(self.ring)
        parts = []
        if self.free_rank:
            parts.append(base if self.free_rank == 1 else f'{base}^{self.free_rank}')
        parts += [f'Z{d}' for d in self.torsion]
        return ' + '.join(parts) if parts else '0'


def from_invariant_factors(factors, free_rank: int) -> GroupPresentation:
    return GroupPresentation(free_rank, tuple(d for d in factors if d > 1), 0)


def matrix_rank(M, ring: int, shape: tuple = None) -> int:
    if ring:
        return rank_mod_p(M, ring, shape)
    return SNF(M, shape, transforms=False).rank


def chain_homology(boundaries: list, ring: int = 0, dims: list = None) -> dict:
    """
    Homology of C_N -> ... -> C_1 -> C_0 given boundaries [d_1, ..., d_N] with d_i: C_i -> C_{i-1}.

    Parameters
    ----------
    boundaries - list of integer matrices, d_i has shape (dim C_{i-1}, dim C_i)
    ring - int, 0 for Z or a prime p
    dims - optional list of dim C_0 .. dim C_N, required when some boundary is empty

    Returns
    -------
    dict degree -> GroupPresentation
    """
    if dims is None:
        dims = [as_int_matrix(boundaries[0]).shape[0]] if boundaries else [0]
        dims += [as_int_matrix(b).shape[1] for b in boundaries]
    matrices = [as_int_matrix(b, (dims[i], dims[i + 1])) for i, b in enumerate(boundaries)]
    for i in range(len(matrices) - 1):
        lower, upper = matrices[i], matrices[i + 1]
        if lower.size and upper.size and np.any(lower.dot(upper) != 0):
            raise NotAComplex(f'd_{i + 1} composed with d_{i + 2} is not zero')
    return _homology_from_matrices(dict(enumerate(dims)), {i + 1: m for i, m in enumerate(matrices)}, ring)


def _homology_from_matrices(dims: dict, matrices: dict, ring: int, degrees=None) -> dict:
    degrees = sorted(dims) if degrees is None else degrees
    ranks, factors = {}, {}
    for d, M in matrices.items():
        if M.size == 0:
            ranks[d], factors[d] = 0, []
        elif ring:
            ranks[d] = matrix_rank(M, ring)
        else:
            snf = SNF(M, transforms=False)
            ranks[d], factors[d] = snf.rank, snf.invariant_factors
    out = {}
    for d in degrees:
        free = dims.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if ring:
            out[d] = GroupPresentation(free, (), ring)
        else:
            out[d] = from_invariant_factors(factors.get(d + 1, []), free)
    return out


@dataclass
class ChainComplex:
    """
    A finite chain complex with named cells in arbitrary (possibly negative) degrees.

    Attributes
    ----------
    cells: dict degree -> list of hashable cell keys (the basis of C_d)
    differential: dict degree -> dict {(target key, source key): coefficient} for d: C_d -> C_{d-1}

    Methods
    -------
    boundary_matrix: dense matrix of d: C_d -> C_{d-1}
    check: raises NotAComplex unless d∘d = 0
    homology: GroupPresentation per degree
    kernel_lattice: saturated integer basis of the cycles in one degree
    """
    cells: dict = field(default_factory=dict)
    differential: dict = field(default_factory=dict)

    def add_cell(self, degree: int, key) -> None:
        self.cells.setdefault(degree, []).append(key)

    def add_incidence(self, degree: int, target, source, coefficient: int) -> None:
        if coefficient == 0:
            return
        entries = self.differential.setdefault(degree, {})
        value = entries.get((target, source), 0) + coefficient
        if value:
            entries[(target, source)] = value
        else:
            entries.pop((target, source), None)

    def index(self, degree: int) -> dict:
        return {key: i for i, key in enumerate(self.cells.get(degree, []))}

    def boundary_matrix(self, degree: int) -> np.ndarray:
        rows, cols = self.index(degree - 1), self.index(degree)
        M = np.zeros((len(rows), len(cols)), dtype=object)
        for (target, source), value in self.differential.get(degree, {}).items():
            if target in rows and source in cols:
                M[rows[target], cols[source]] += value
        return M

    def _entries(self, degree: int) -> list:
        """Incidences of d: C_degree -> C_degree-1 between cells that exist."""
        rows, cols = set(self.cells.get(degree - 1, [])), set(self.cells.get(degree, []))
        return [(t, s, v) for (t, s), v in self.differential.get(degree, {}).items() if t in rows and s in cols]

    def check(self) -> None:
        for d in sorted(self.cells):
            by_source = {}
            for target, source, value in self._entries(d):
                by_source.setdefault(source, []).append((target, value))
            square = {}
            for middle, source, value in self._entries(d + 1):
                for target, other in by_source.get(middle, []):
                    square[(target, source)] = square.get((target, source), 0) + value*other
            bad = [pair for pair, value in square.items() if value]
            if bad:
                target, source = bad[0]
                raise NotAComplex(f'the differential squares to a non-zero map from degree {d + 1}: '
                                  f'{len(bad)} entries, first {source} -> {target}')

    def homology(self, ring: int = 0, degrees=None) -> dict:
        degrees = sorted(self.cells) if degrees is None else list(degrees)
        needed = {d for deg in degrees for d in (deg, deg + 1)}
        matrices = {d: self.boundary_matrix(d) for d in needed}
        dims = {d: len(self.cells.get(d, [])) for d in set(self.cells) | needed}
        return _homology_from_matrices(dims, matrices, ring, degrees)

    def kernel_lattice(self, degree: int, ring: int = 0) -> np.ndarray:
        M = self.boundary_matrix(degree)
        n = len(self.cells.get(degree, []))
        if M.shape[0] == 0:
            return np.eye(n, dtype=np.int64).astype(object) if not ring else np.eye(n, dtype=np.int64)
        if ring:
            return nullspace_mod_p(M, ring)
        return SNF(M).kernel_basis
