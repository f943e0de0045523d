from doodlinv.homology.smith import SNF, smith_normal_form, reference_invariant_factors, solve_integer
from doodlinv.homology.chain_homology import GroupPresentation, ChainComplex, chain_homology
from doodlinv.homology.equivariant import equivariant_part, cokernel_part, restrict_to_lattice
