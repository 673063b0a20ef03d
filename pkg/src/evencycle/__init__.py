"""Even-cycle detection in sparse graphs via degree-ordered capped walks."""

from .detector import DetectorConfig, colorful_path_dp, detect_cycle_through
from .finder import Decision, FinderReport, Verdict, decide_even_cycle, find_even_cycle
from .gadget import GadgetGraph, build_gadget, build_tripartite, verify_reduction
from .generators import gen_c4_free_polarity, gen_high_girth, gen_planted_cycle, gen_random
from .graph import (
    Cycle,
    DegreeOrder,
    Graph,
    GraphFormatError,
    capped_neighborhood,
    degree_order,
    density_shortcut,
    parse_graph,
    serialize_graph,
)
from .oracle import BudgetExceeded, oracle_count_k_walks, oracle_cycle_through, oracle_has_cycle
from .snorm import snorm
from .walks import CappedWalkCensus, check_lower_bound, count_capped_walks

__version__ = "0.1.0"
