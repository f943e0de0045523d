"""
Collisions of adjacent points and the chain maps they induce on relative order complexes.

A collision acts on linear words: Collision(i) merges positions i and i+1; the wrap collision merges the last
position with the first and places the merged slot first. Same-group collisions add multiplicities,
cross-group collisions merge the groups and give the merged slot multiplicity m1 + m2 - 1.
"""
from dataclasses import dataclass

from doodlinv.cliques.clique_class import relabel
from doodlinv.complexes.poset import poset_of_word
from doodlinv.errors import IllegalCollision


@dataclass(frozen=True)
class CollisionResult:
    word: tuple
    position_map: tuple
    merged_position: int
    same_group: bool


def rotate_word(word: tuple) -> tuple:
    """Moves the last letter to the front; returns (new word, position map)."""
    n = len(word)
    new_word = relabel((word[-1],) + tuple(word[:-1]))
    return new_word, tuple((j + 1) % n for j in range(n))


def pair_position_map(n: int, left: int) -> tuple:
    """
    Position map of a word of length n when positions left and left + 1 merge (left = n - 1 is the wrap pair).

    Returns
    -------
    (position map, merged position)
    """
    if left == n - 1:
        return tuple(0 if j in (0, n - 1) else j for j in range(n)), 0
    return tuple(j if j <= left else j - 1 for j in range(n)), left


def max_multiplicity(k: int) -> int:
    return 3 if k == 3 else 1


def collide(word: tuple, i: int, k: int = 3, wrap: bool = False) -> CollisionResult:
    """
    Merges positions i and i+1 of word (or the last and the first when wrap is set).

    Raises IllegalCollision when the merged multiplicity is not allowed for arity k.
    """
    n = len(word)
    if n < 2:
        raise IllegalCollision(f'a word with {n} letters has no adjacent pair')
    if wrap:
        a, b = n - 1, 0
    else:
        if not 0 <= i < n - 1:
            raise IllegalCollision(f'no adjacent pair at position {i} in a word of length {n}')
        a, b = i, i + 1
    position_map, merged_position = pair_position_map(n, a)
    (ga, ma), (gb, mb) = word[a], word[b]
    same_group = ga == gb
    multiplicity = ma + mb if same_group else ma + mb - 1
    if multiplicity > max_multiplicity(k):
        raise IllegalCollision(f'collision gives multiplicity {multiplicity} > {max_multiplicity(k)}')
    merged_word = [None]*(n - 1)
    for j, (g, m) in enumerate(word):
        g = ga if g == gb else g
        merged_word[position_map[j]] = (g, m)
    merged_word[merged_position] = (ga, multiplicity)
    return CollisionResult(relabel(merged_word), position_map, merged_position, same_group)


def map_element(element: tuple, position_map: tuple) -> tuple:
    """
    Image of a poset element under a position map.

    Inside a component the counts of positions sent to the same slot add. Two components meeting at a slot are
    merged, with count c1 + c2 - 1 there: the two tangent branches of the limit plane share one point.
    """
    images = []
    for component in element:
        counts = {}
        for position, count in component:
            target = position_map[position]
            counts[target] = counts.get(target, 0) + count
        images.append(counts)
    merged = True
    while merged:
        merged = False
        for x in range(len(images)):
            for y in range(x + 1, len(images)):
                if not set(images[x]) & set(images[y]):
                    continue
                union = dict(images[x])
                for position, count in images[y].items():
                    union[position] = union[position] + count - 1 if position in union else count
                images = [c for z, c in enumerate(images) if z not in (x, y)] + [union]
                merged = True
                break
            if merged:
                break
    return tuple(sorted(tuple(sorted(c.items())) for c in images))


def map_chain(chain: tuple, position_map: tuple):
    """Image simplex of a chain, or None when two vertices collapse."""
    image = tuple(map_element(S, position_map) for S in chain)
    if len(set(image)) < len(image):
        return None
    return image


def collision_map(chain: dict, word: tuple, i: int, k: int = 3, wrap: bool = False) -> tuple:
    """
    Pushes a relative chain {simplex: coefficient} on word through a collision.

    Returns
    -------
    (collided word, image chain on the collided word)
    """
    result = collide(word, i, k, wrap)
    target = poset_of_word(result.word, k)
    valid = set(target.elements)
    out = {}
    for simplex, value in chain.items():
        image = map_chain(simplex, result.position_map)
        if image is None:
            continue
        if any(S not in valid for S in image):
            raise IllegalCollision(f'collision produced an element outside the target poset: {image}')
        out[image] = out.get(image, 0) + value
    return result.word, {s: v for s, v in out.items() if v}
