"""
Blocks of the resolved discriminant: the fiber bundle over the space of cliques of one class.

The base is the space of rho cyclically ordered distinct points of the circle; its fundamental loop acts on the
fiber by the minimal class-preserving rotation of the slots. Block Borel-Moore homology follows from the Wang
sequence of that loop.
"""
from dataclasses import dataclass
from functools import cached_property

from doodlinv.cliques.clique_class import CliqueClass
from doodlinv.complexes.collision import map_chain
from doodlinv.complexes.order_complex import relative_complex
from doodlinv.homology.chain_homology import ChainComplex, GroupPresentation
from doodlinv.homology.equivariant import cokernel_part, equivariant_part, restrict_to_lattice
from doodlinv.homology.smith import as_int_matrix


def shift_map(rho: int, r: int) -> tuple:
    return tuple((j + r) % rho for j in range(rho))


def fiber_action(complex_: ChainComplex, degree: int, position_map: tuple):
    """Matrix of the slot permutation on the relative chains of one degree."""
    index = complex_.index(degree)
    out = as_int_matrix(None, (len(index), len(index)))
    for simplex, column in index.items():
        image = map_chain(simplex, position_map)
        out[index[image], column] = 1
    return out


@dataclass(frozen=True)
class BlockDescriptor:
    """
    Attributes
    ----------
    cls: clique class (its arity is cls.k)
    rho: base dimension, the number of geometrically distinct points
    eps_base: sign of the slot permutation of the minimal class-preserving rotation
    shift: that rotation, in slots (rho when the class has no rotational symmetry)
    degree_offset: relative degrees are taken with respect to this offset, which is never given a value

    Properties
    ----------
    fiber: relative order complex of the class on its canonical word
    fiber_top: top dimension of the fiber
    rho_fiber: matrix of the rotation on fiber chains of top dimension
    """
    cls: CliqueClass
    rho: int
    eps_base: int
    shift: int
    degree_offset: str = 'Delta'

    @cached_property
    def fiber(self) -> ChainComplex:
        return relative_complex(self.cls)

    @property
    def fiber_top(self) -> int:
        return max(self.fiber.cells)

    @property
    def position_map(self) -> tuple:
        return shift_map(self.rho, self.shift)

    def rho_fiber(self, degree: int = None):
        return fiber_action(self.fiber, self.fiber_top if degree is None else degree, self.position_map)

    def relative_degree(self, fiber_degree: int, base_degree: int = None) -> int:
        base_degree = self.rho if base_degree is None else base_degree
        return base_degree + fiber_degree - self.cls.codim

    def to_dict(self) -> dict:
        return {
            'class': self.cls.code, 'k': self.cls.k, 'rho': self.rho, 'eps_base': self.eps_base,
            'shift': self.shift, 'fiber_top': self.fiber_top, 'degree_offset': self.degree_offset,
        }


def block(cls: CliqueClass, k: int = None) -> BlockDescriptor:
    if k is not None and k != cls.k:
        cls = CliqueClass.from_slots(cls.slots, k)
    r = cls.symmetry_shift
    eps = (-1)**(r*(cls.rho - 1))
    return BlockDescriptor(cls, cls.rho, eps, r)


@dataclass(frozen=True)
class BlockHomology:
    """
    Wang-sequence groups of one block.

    Attributes
    ----------
    top: ker(rho_fiber - eps_base) on the top fiber homology, in relative degree top_degree
    second: coker(rho_fiber - eps_base), in relative degree top_degree - 1
    top_degree: rho + fiber top dimension - codim
    lower_fiber: nonzero fiber homology below the top dimension, fiber degree -> GroupPresentation
    """
    top: GroupPresentation
    second: GroupPresentation
    top_degree: int
    lower_fiber: dict

    def to_dict(self) -> dict:
        return {
            'top': self.top.to_dict(), 'second': self.second.to_dict(), 'top_degree': self.top_degree,
            'lower_fiber': {str(d): g.to_dict() for d, g in sorted(self.lower_fiber.items())},
        }


def block_top_homology(b: BlockDescriptor, ring: int = 0) -> BlockHomology:
    """
    Parameters
    ----------
    b - BlockDescriptor
    ring - int, 0 for Z or a prime p

    Returns
    -------
    BlockHomology
    """
    top = b.fiber_top
    cycles = b.fiber.kernel_lattice(top, ring)
    action = restrict_to_lattice(b.rho_fiber(top), cycles, ring)
    top_group, _ = equivariant_part(action, b.eps_base, ring)
    second = cokernel_part(action, b.eps_base, ring)
    fiber_homology = b.fiber.homology(ring)
    lower = {d: g for d, g in fiber_homology.items() if d < top and not g.is_zero}
    return BlockHomology(top_group, second, b.relative_degree(top), lower)


def wang_rank_check(b: BlockDescriptor) -> bool:
    """Over Q the invariant and coinvariant parts of the top fiber homology have equal rank."""
    h = block_top_homology(b, 0)
    return h.top.free_rank == h.second.free_rank
