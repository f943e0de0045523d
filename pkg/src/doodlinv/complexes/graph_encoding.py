"""
Arrow notation for the relative order complex of one group of n points with arity n - 2.

The 2-simplex (S0 < S1 < chi) with |S0| = n - 2, |S1| = n - 1 is drawn as an arrow between the two points missing
from S0, pointing at the point missing from S1. Edges (S0 < chi) are undirected edges of K_n, edges (S1 < chi) are
marked vertices. The arrow chain is the negated simplex, so that its boundary is the edge minus the arrowhead.
"""
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from doodlinv.complexes.order_complex import chain_boundary
from doodlinv.complexes.poset import poset_of_word
from doodlinv.errors import UnsupportedArity


def _word(n: int) -> tuple:
    return tuple((0, 1) for _ in range(n))


def _subset(n: int, missing) -> tuple:
    return tuple((p, 1) for p in range(n) if p not in missing)


@dataclass(frozen=True)
class GraphEncoding:
    """
    Correspondence tables between relative chains of the n-point clique and graphs on n vertices.

    Attributes
    ----------
    n: number of points
    k: arity, n - 2
    word: the single-group word of length n
    chi: maximal poset element
    """
    n: int
    k: int
    word: tuple
    chi: tuple

    def vertex(self, missing) -> tuple:
        return (_subset(self.n, missing),)

    def arrow_simplex(self, a: int, b: int) -> tuple:
        return self.vertex({a, b}), self.vertex({b}), self.chi

    def arrow_chain(self, a: int, b: int) -> dict:
        return {self.arrow_simplex(a, b): -1}

    def edge_chain(self, a: int, b: int) -> dict:
        return {(self.vertex({a, b}), self.chi): 1}

    def marked_vertex_chain(self, b: int) -> dict:
        return {(self.vertex({b}), self.chi): 1}

    def double_arrow_chain(self, a: int, b: int) -> dict:
        out = dict(self.arrow_chain(a, b))
        for simplex, value in self.arrow_chain(b, a).items():
            out[simplex] = out.get(simplex, 0) - value
        return out

    def arrows(self) -> dict:
        """(a, b) -> 2-simplex, for all ordered pairs."""
        return {(a, b): self.arrow_simplex(a, b) for a in range(self.n) for b in range(self.n) if a != b}

    def chain_from_graph_cycle(self, cycle) -> dict:
        """Relative 2-chain of double arrows along an oriented cycle given as a vertex list."""
        out = {}
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            for simplex, value in self.double_arrow_chain(a, b).items():
                out[simplex] = out.get(simplex, 0) + value
        return {s: v for s, v in out.items() if v}

    def graph_cycle_from_chain(self, chain: dict) -> dict:
        """Oriented edge weights {(a, b): w} with a < b carried by a combination of double arrows."""
        arrows = self.arrows()
        out = {}
        for a, b in combinations(range(self.n), 2):
            weight = -chain.get(arrows[(a, b)], 0)
            if weight:
                out[(a, b)] = weight
        return out

    def cycle_space_basis(self) -> list:
        """Relative 2-cycles from a cycle basis of K_n."""
        graph = nx.complete_graph(self.n)
        return [self.chain_from_graph_cycle(cycle) for cycle in nx.cycle_basis(graph)]

    def boundary(self, chain: dict) -> dict:
        return chain_boundary(chain)


def graph_cycle_encoding(n: int, k: int = None) -> GraphEncoding:
    """
    Arrow encoding of the relative order complex of n points with arity k = n - 2 (n in {5, 6}).
    """
    k = n - 2 if k is None else k
    if n not in (5, 6) or k != n - 2:
        raise UnsupportedArity(f'the arrow encoding needs n in (5, 6) and k = n - 2, got n={n}, k={k}')
    word = _word(n)
    poset = poset_of_word(word, k)
    return GraphEncoding(n, k, word, poset.chi)
