"""
The subspace poset of an A-clique.

Elements are written on a linear word (tuple of slots (group, multiplicity)); a component is a tuple of
(position, count) pairs inside one group with total count >= k, and an element is a sorted tuple of components
with pairwise disjoint positions. S <= T iff each component of S is a sub-multiset of a component of T.
"""
from dataclasses import dataclass
from functools import lru_cache, cached_property
from itertools import product

from doodlinv.cliques.clique_class import CliqueClass, slots_to_code


def component_size(component) -> int:
    return sum(count for _, count in component)


def element_codim(element) -> int:
    return sum(2*(component_size(c) - 1) for c in element)


def is_submultiset(small, large) -> bool:
    counts = dict(large)
    return all(counts.get(position, 0) >= count for position, count in small)


def element_leq(S, T) -> bool:
    return all(any(is_submultiset(c, d) for d in T) for c in S)


def element_code(element, word) -> str:
    """Readable form, e.g. '{0,1,2}' or '{0x2,3,4}|{5,6,7}' with positions and counts."""
    parts = []
    for c in element:
        parts.append('{' + ','.join(f'{p}' + (f'x{n}' if n > 1 else '') for p, n in c) + '}')
    return '|'.join(parts)


def word_components(word: tuple, k: int) -> list:
    """All within-group multisets of size >= k, sorted by (size, content)."""
    groups = {}
    for position, (g, m) in enumerate(word):
        groups.setdefault(g, []).append((position, m))
    out = []
    for g in sorted(groups):
        slots = groups[g]
        for counts in product(*[range(m + 1) for _, m in slots]):
            if sum(counts) >= k:
                out.append(tuple((position, n) for (position, _), n in zip(slots, counts) if n > 0))
    return sorted(out, key=lambda c: (component_size(c), c))


@dataclass(frozen=True)
class SubspacePoset:
    """
    Attributes
    ----------
    word: the linear slot word the poset is written on
    k: arity
    elements: all elements sorted by (codim, content)
    chi: the maximal element, one full component per group
    """
    word: tuple
    k: int
    elements: tuple
    chi: tuple

    @cached_property
    def below(self) -> dict:
        """element -> tuple of elements strictly below it."""
        return {T: tuple(S for S in self.elements if S != T and element_leq(S, T)) for T in self.elements}

    @cached_property
    def atoms(self) -> tuple:
        return tuple(S for S in self.elements if not self.below[S])

    def to_dict(self) -> dict:
        return {
            'word': slots_to_code(self.word), 'k': self.k,
            'elements': [{'components': [[list(pair) for pair in c] for c in S], 'codim': element_codim(S)}
                         for S in self.elements],
            'chi': element_code(self.chi, self.word),
        }


@lru_cache(maxsize=None)
def poset_of_word(word: tuple, k: int) -> SubspacePoset:
    components = word_components(word, k)
    elements = []

    def extend(start, chosen, used):
        if chosen:
            elements.append(tuple(sorted(chosen)))
        for i in range(start, len(components)):
            positions = {p for p, _ in components[i]}
            if positions & used:
                continue
            extend(i + 1, chosen + [components[i]], used | positions)

    extend(0, [], set())
    elements = sorted(set(elements), key=lambda S: (element_codim(S), S))
    groups = {}
    for position, (g, m) in enumerate(word):
        groups.setdefault(g, []).append((position, m))
    chi = tuple(sorted(tuple(slots) for slots in groups.values()))
    return SubspacePoset(tuple(word), k, tuple(elements), chi)


def build_poset(cls: CliqueClass, k: int = None) -> SubspacePoset:
    """Π(J) written on the canonical slot word of the class."""
    return poset_of_word(tuple(cls.slots), cls.k if k is None else k)
