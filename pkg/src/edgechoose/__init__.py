"""List edge-coloring with two colors per edge on subcubic graphs."""

from .chooser import choose_3ec, choose_72, choose_gstar, choose_med, even_cycle_choose, key_lemma_choose
from .colors import SetColoring, make_uniform_assignment, save_margin, verify_set_coloring
from .decomposition import MedDecomposition, find_med_by_long_cycle, find_med_exhaustive, find_proper_3ec, verify_med
from .errors import BudgetExceeded, ContractGap, Graph6Error, GraphError, Unsupported
from .graph import Graph, encode_graph6, generate_named, parse_graph6
from .oracle import brute_force_choose, brute_force_rs_colorable, exhaustive_choosability_check

__version__ = "0.1.0"
