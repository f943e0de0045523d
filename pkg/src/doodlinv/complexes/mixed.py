"""
Mixed limits of two disjoint cross-group collisions.

When two disjoint adjacent pairs of a word both join the same two groups, the order of the collisions matters: the
pair colliding first merges the groups, and the second one then becomes a double point. Between the two orders the
limit planes form a one-parameter family indexed by the ratio of the two separations. None of these planes is the
plane of a clique, so the family is a stratum of its own.

A mixed corner is written on the word M in which both pairs are merged with cross-group multiplicities. The two merged
slots are marked in increasing position, and a sign records whether the groups meet in the same order at both pairs.
The ratio parameter runs from 0 (the first mark collided first, the second mark is doubled) to 1 (the reverse).
The fiber poset is the poset of M with one new maximal element, the mixed plane, so a fiber simplex is a chain in
the poset of M, possibly empty, with the mixed plane implied on top.
"""
from dataclasses import dataclass
from functools import lru_cache

from doodlinv.cliques.clique_class import relabel
from doodlinv.complexes.collision import map_element, max_multiplicity, pair_position_map, rotate_word
from doodlinv.complexes.order_complex import chains_ending_at
from doodlinv.complexes.poset import poset_of_word
from doodlinv.errors import UnsupportedArity


@dataclass(frozen=True)
class MixedCorner:
    """
    Attributes
    ----------
    word: the word M with both pairs merged
    marks: the two merged positions of M, increasing
    sign: +1 when the groups meet in the same order at both pairs, else -1
    pairs: left positions of the two pairs in the source word, increasing (the last position is the wrap pair)
    flipped: True when the first mark comes from the second pair, which reverses the ratio parameter
    """
    word: tuple
    marks: tuple
    sign: int
    pairs: tuple
    flipped: bool = False

    @property
    def key(self) -> tuple:
        return self.word, self.marks, self.sign


def _pair(n: int, left: int) -> tuple:
    return left, (left + 1) % n


def _sequential_maps(n: int, first: int, second: int) -> tuple:
    """Position maps of the two collisions applied one after the other, first pair first."""
    map1, merged1 = pair_position_map(n, first)
    map2, merged2 = pair_position_map(n - 1, map1[second])
    return map1, map2, map2[merged1], merged2


def mixed_corner(word: tuple, first: int, second: int, k: int = 3):
    """
    The mixed corner of two adjacent pairs given by their left positions, or None when the collision order does not
    matter (pairs sharing a point, a same-group pair, or pairs joining different groups).
    """
    n = len(word)
    first, second = sorted((first, second))
    p, q = _pair(n, first), _pair(n, second)
    if set(p) & set(q):
        return None
    groups_p = (word[p[0]][0], word[p[1]][0])
    groups_q = (word[q[0]][0], word[q[1]][0])
    if groups_p[0] == groups_p[1] or set(groups_p) != set(groups_q):
        return None
    map1, map2, mark_p, mark_q = _sequential_maps(n, first, second)
    position_map = tuple(map2[map1[j]] for j in range(n))
    merged = [None]*(n - 2)
    a, b = groups_p
    for j, (g, m) in enumerate(word):
        merged[position_map[j]] = (a if g == b else g, m)
    for left, right in (p, q):
        multiplicity = word[left][1] + word[right][1] - 1
        if multiplicity > max_multiplicity(k):
            return None
        merged[position_map[left]] = (a, multiplicity)
    sign = 1 if groups_p[0] == groups_q[0] else -1
    return MixedCorner(relabel(merged), tuple(sorted((mark_p, mark_q))), sign, (first, second), mark_p > mark_q)


def corner_image(chain: tuple, word: tuple, corner: MixedCorner):
    """
    Fiber simplex of the corner reached from a relative chain of word; the top vertex goes to the mixed plane.

    Raises UnsupportedArity when a lower vertex has different limits along the two collision orders.
    """
    n = len(word)
    first, second = corner.pairs
    map1, map2, _, _ = _sequential_maps(n, first, second)
    back1, back2, _, _ = _sequential_maps(n, second, first)
    image = []
    for S in chain[:-1]:
        one = map_element(map_element(S, map1), map2)
        other = map_element(map_element(S, back1), back2)
        if one != other:
            raise UnsupportedArity(f'the limit of {S} on {word} depends on the collision order')
        image.append(one)
    if len(set(image)) < len(image):
        return None
    return tuple(image)


def rotate_corner(key: tuple) -> tuple:
    """
    The corner cut one slot earlier: (rotated key, position map, flipped).
    """
    word, marks, sign = key
    rotated, rotation = rotate_word(word)
    new_marks = (rotation[marks[0]], rotation[marks[1]])
    return (rotated, tuple(sorted(new_marks)), sign), rotation, new_marks[0] > new_marks[1]


def corner_orbit(key: tuple) -> list:
    out = [key]
    for _ in range(len(key[0]) - 1):
        key = rotate_corner(key)[0]
        if key not in out:
            out.append(key)
    return out


def corner_end(key: tuple, end: int, k: int = 3):
    """
    Word at one end of the ratio parameter: end 0 doubles the second mark, end 1 the first. None when illegal.
    """
    word, marks, _ = key
    position = marks[1] if end == 0 else marks[0]
    g, m = word[position]
    if m + 1 > max_multiplicity(k):
        return None
    return tuple((g, m + 1) if j == position else slot for j, slot in enumerate(word))


@lru_cache(maxsize=None)
def corner_chains(word: tuple, k: int) -> dict:
    """dimension -> sorted chains of the poset of word, the empty chain included, each topped by the mixed plane."""
    poset = poset_of_word(word, k)
    out = {0: [()]}
    for T in poset.elements:
        for chain in chains_ending_at(poset, T):
            out.setdefault(len(chain), []).append(chain)
    return {d: sorted(chains) for d, chains in sorted(out.items())}
