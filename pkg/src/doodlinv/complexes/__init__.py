from doodlinv.complexes.poset import SubspacePoset, build_poset, poset_of_word
from doodlinv.complexes.order_complex import relative_complex, relative_homology, relative_simplices
from doodlinv.complexes.collision import collide, collision_map, rotate_word
from doodlinv.complexes.graph_encoding import graph_cycle_encoding
