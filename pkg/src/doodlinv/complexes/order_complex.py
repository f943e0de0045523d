"""
Order complexes of subspace posets and their relative chain complexes.

A simplex is a strictly increasing chain of poset elements, vertices ordered by increasing codimension.
The relative complex keeps the chains ending at chi; faces dropping chi are marginal and vanish.
"""
from functools import lru_cache

from doodlinv.cliques.clique_class import CliqueClass, slots_to_code
from doodlinv.complexes.poset import SubspacePoset, poset_of_word, element_code
from doodlinv.homology.chain_homology import ChainComplex


def chains_ending_at(poset: SubspacePoset, top) -> list:
    """All strictly increasing chains whose last vertex is top."""
    out = []

    def extend(chain):
        out.append(tuple(reversed(chain)))
        for S in poset.below[chain[-1]]:
            extend(chain + [S])

    extend([top])
    return out


@lru_cache(maxsize=None)
def relative_simplices(word: tuple, k: int) -> dict:
    """dimension -> sorted list of chains ending at chi."""
    poset = poset_of_word(word, k)
    out = {}
    for chain in chains_ending_at(poset, poset.chi):
        out.setdefault(len(chain) - 1, []).append(chain)
    return {d: sorted(chains) for d, chains in sorted(out.items())}


def relative_boundary(chain: tuple) -> list:
    """(coefficient, face) pairs of the relative boundary; the face dropping chi is marginal."""
    return [((-1)**i, chain[:i] + chain[i + 1:]) for i in range(len(chain) - 1)]


def full_order_complex_dimension(word: tuple, k: int) -> int:
    poset = poset_of_word(word, k)
    longest = {}
    for S in poset.elements:
        longest[S] = 1 + max((longest[T] for T in poset.below[S]), default=0)
    return max(longest.values()) - 1


def relative_complex(cls_or_word, k: int = None) -> ChainComplex:
    """
    The relative chain complex of ◊(J) modulo its marginal faces, graded by simplex dimension.
    """
    if isinstance(cls_or_word, CliqueClass):
        word, k = tuple(cls_or_word.slots), cls_or_word.k if k is None else k
    else:
        word = tuple(cls_or_word)
    complex_ = ChainComplex()
    for d, chains in relative_simplices(word, k).items():
        for chain in chains:
            complex_.add_cell(d, chain)
            if d > 0:
                for sign, face in relative_boundary(chain):
                    complex_.add_incidence(d, face, chain, sign)
    return complex_


def relative_homology(cls_or_word, k: int = None, ring: int = 0) -> dict:
    return relative_complex(cls_or_word, k).homology(ring)


def chain_boundary(chain: dict) -> dict:
    """Relative boundary of a chain given as {simplex: coefficient}."""
    out = {}
    for simplex, value in chain.items():
        for sign, face in relative_boundary(simplex):
            out[face] = out.get(face, 0) + sign*value
    return {s: v for s, v in out.items() if v}


def complex_to_dict(complex_: ChainComplex, word: tuple) -> dict:
    return {
        'word': slots_to_code(word),
        'simplices': {str(d): [[element_code(S, word) for S in chain] for chain in chains]
                      for d, chains in sorted(complex_.cells.items())},
        'boundaries': {str(d): complex_.boundary_matrix(d).tolist()
                       for d in sorted(complex_.cells) if d > min(complex_.cells)},
    }
