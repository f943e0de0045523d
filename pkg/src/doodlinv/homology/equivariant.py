"""
Eigen-subgroups of a lattice automorphism: ker(rho - eps) and coker(rho - eps), over Z or Z/p.
"""
import numpy as np

from doodlinv.homology.chain_homology import GroupPresentation, from_invariant_factors
from doodlinv.homology.smith import SNF, as_int_matrix, identity, nullspace_mod_p, rank_mod_p, solve_integer, \
    solve_mod_p


def _shifted(rho, eps: int) -> np.ndarray:
    R = as_int_matrix(rho)
    return R - eps*identity(R.shape[0])


def equivariant_part(rho, eps: int, ring: int = 0) -> tuple:
    """
    Returns (GroupPresentation, basis) of {x : rho·x = eps·x}.

    Over Z the basis columns span a saturated sublattice. Over Z/p they span the kernel mod p.
    """
    R = as_int_matrix(rho)
    n = R.shape[0]
    if n == 0:
        return GroupPresentation(0, (), ring), np.zeros((0, 0), dtype=object)
    if ring:
        basis = nullspace_mod_p(_shifted(R, eps), ring)
        return GroupPresentation(basis.shape[1], (), ring), basis
    basis = SNF(_shifted(R, eps)).kernel_basis
    return GroupPresentation(basis.shape[1], (), 0), basis


def cokernel_part(rho, eps: int, ring: int = 0) -> GroupPresentation:
    """
    coker(rho - eps) over ring.
    """
    R = as_int_matrix(rho)
    n = R.shape[0]
    if n == 0:
        return GroupPresentation(0, (), ring)
    M = _shifted(R, eps)
    if ring:
        return GroupPresentation(n - rank_mod_p(M, ring), (), ring)
    snf = SNF(M, transforms=False)
    return from_invariant_factors(snf.invariant_factors, n - snf.rank)


def restrict_to_lattice(action, basis, ring: int = 0) -> np.ndarray:
    """
    Matrix of an ambient map on the lattice spanned by basis columns.

    Parameters
    ----------
    action - square matrix acting on ambient coordinates
    basis - columns spanning an invariant lattice (or subspace over Z/p)
    """
    action = as_int_matrix(action)
    r = basis.shape[1]
    if ring:
        out = np.zeros((r, r), dtype=np.int64)
        for i in range(r):
            image = np.array([int(x) for x in action.dot(np.array(basis[:, i], dtype=object))], dtype=np.int64)
            out[:, i] = solve_mod_p(basis, image, ring)
        return out
    out = np.zeros((r, r), dtype=object)
    for i in range(r):
        out[:, i] = solve_integer(basis, action.dot(basis[:, i]))
    return out
