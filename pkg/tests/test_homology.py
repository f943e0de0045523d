import numpy as np
import pytest

from doodlinv.blocks.block import fiber_action, shift_map
from doodlinv.complexes.graph_encoding import graph_cycle_encoding
from doodlinv.complexes.order_complex import relative_complex
from doodlinv.errors import NotAComplex, ValidationError
from doodlinv.homology.chain_homology import ChainComplex, GroupPresentation, chain_homology, matrix_rank
from doodlinv.homology.equivariant import cokernel_part, equivariant_part, restrict_to_lattice
from doodlinv.homology.smith import SNF, check_against_reference, rank_mod_p, reference_invariant_factors, \
    smith_normal_form, solve_integer


def sum_zero_rotation(n: int) -> np.ndarray:
    """Cyclic shift of n rays on the lattice spanned by e_i - e_(i+1)."""
    M = np.zeros((n - 1, n - 1), dtype=object)
    for i in range(n - 2):
        M[i + 1, i] = 1
    M[:, n - 2] = -1
    return M


def test_smith_diagonal():
    D, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert [D[0, 0], D[1, 1]] == [1, 6]
    assert (U.dot(np.array([[2, 0], [0, 3]], dtype=object)).dot(V) == D).all()


def test_smith_zero_matrix():
    snf = SNF(np.zeros((2, 3), dtype=object))
    assert snf.invariant_factors == []
    assert snf.rank == 0
    assert snf.kernel_basis.shape == (3, 3)


@pytest.mark.parametrize('M', [
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[1, 2], [3, 4], [5, 6]],
    [[0, 0, 7], [0, 14, 0]],
])
def test_smith_matches_sympy(M):
    snf = SNF(M)
    assert snf.invariant_factors == reference_invariant_factors(M)
    assert check_against_reference(M) == snf.invariant_factors
    assert snf.verify()


def test_solve_integer():
    K = np.array([[1, 0], [1, 1], [0, 1]], dtype=object)
    c = solve_integer(K, [2, 5, 3])
    assert list(c) == [2, 3]


def test_rank_mod_p():
    assert rank_mod_p([[2, 0], [0, 3]], 2) == 1
    assert rank_mod_p([[2, 0], [0, 3]], 5) == 2
    assert matrix_rank([[2, 0], [0, 3]], 0) == 2
    assert matrix_rank([[2, 4], [1, 2]], 3) == 1


def test_circle_homology():
    groups = chain_homology([[[0]]])
    assert groups[0] == GroupPresentation(1)
    assert groups[1] == GroupPresentation(1)


def test_projective_plane_torsion():
    groups = chain_homology([[[0]], [[2]]])
    assert groups[1] == GroupPresentation(0, (2,))
    assert groups[2].is_zero
    assert chain_homology([[[0]], [[2]]], ring=2)[1] == GroupPresentation(1, (), 2)


def test_not_a_complex():
    with pytest.raises(NotAComplex):
        chain_homology([[[1]], [[1]]])


def test_chain_complex_cells():
    c = ChainComplex()
    c.add_cell(0, 'p')
    c.add_cell(1, 'a')
    c.add_cell(1, 'b')
    c.add_incidence(1, 'p', 'a', 1)
    c.add_incidence(1, 'p', 'b', 1)
    c.check()
    groups = c.homology()
    assert groups[0].is_zero
    assert groups[1] == GroupPresentation(1)


def test_group_presentation_rules():
    with pytest.raises(ValidationError):
        GroupPresentation(0, (2, 3))
    with pytest.raises(ValidationError):
        GroupPresentation(1, (2,), 5)
    g = GroupPresentation(2, (2, 4))
    assert GroupPresentation.from_dict(g.to_dict()) == g
    assert str(g) == 'Z^2 + Z2 + Z4'
    assert str(GroupPresentation()) == '0'


def test_cross_anti_invariant():
    rho = sum_zero_rotation(4)
    top, basis = equivariant_part(rho, -1)
    assert top == GroupPresentation(1)
    assert basis.shape == (3, 1)
    assert cokernel_part(rho, -1) == GroupPresentation(1)


def test_five_star_invariant_part():
    rho = sum_zero_rotation(5)
    assert equivariant_part(rho, 1)[0].is_zero
    assert equivariant_part(rho, 1, ring=5)[0] == GroupPresentation(1, (), 5)
    assert cokernel_part(rho, 1) == GroupPresentation(0, (5,))


def test_complex_check_names_the_bad_entry():
    c = ChainComplex()
    c.add_cell(0, 'p')
    c.add_cell(1, 'e')
    c.add_cell(2, 'f')
    c.add_incidence(1, 'p', 'e', 1)
    c.add_incidence(2, 'e', 'f', 1)
    with pytest.raises(NotAComplex, match='first f -> p'):
        c.check()


def graph_rotation(n: int, ring: int):
    """Rotation of n points on the relative 2-cycles spanned by a cycle basis of K_n."""
    encoding = graph_cycle_encoding(n)
    complex_ = relative_complex(encoding.word, encoding.k)
    index = complex_.index(2)
    cycles = encoding.cycle_space_basis()
    basis = np.zeros((len(index), len(cycles)), dtype=object)
    for j, chain in enumerate(cycles):
        for simplex, value in chain.items():
            basis[index[simplex], j] = value
    return restrict_to_lattice(fiber_action(complex_, 2, shift_map(n, 1)), basis, ring)


@pytest.mark.parametrize('ring', [0, 2, 5])
@pytest.mark.parametrize('n, eps', [(5, 1), (6, -1)])
def test_complete_graph_equivariant_ranks(n, eps, ring):
    top, _ = equivariant_part(graph_rotation(n, ring), eps, ring)
    assert top.free_rank == 2
    assert not top.torsion
