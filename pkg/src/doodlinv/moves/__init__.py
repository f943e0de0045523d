from doodlinv.moves.moves import KinkRemoval, KinkCreation, TangencyRemoval, TangencyCreation, TriangleMove, \
    find_move_sites, apply_move, apply_with_inverse, event_to_dict, event_from_dict
from doodlinv.moves.quasidoodle import Quasidoodle, FormTriple, JoinBranch, DegenerationProcess, \
    enumerate_processes, collapse_triangle, join_branch
from doodlinv.moves.resolution import resolve_last, resolve_vertex, resolve_branch, shift_branch
from doodlinv.moves.traces import MoveTrace, SimplifyResult, random_trace, simplify, greedy_reduce
from doodlinv.moves.realize import Realization, realize_class, distinct_realizations
from doodlinv.moves.merkov import merkov_candidates, merkov_search
