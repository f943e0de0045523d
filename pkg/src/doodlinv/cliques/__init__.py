from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes, codim, canonical_slots
from doodlinv.cliques.modes import degeneration_modes, degeneration_process_count, hypergraph_connected, \
    FormTuple, JoinPoint
