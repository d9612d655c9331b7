"""Realizability of Gauss diagrams of closed plane curves."""

from .codec import (
    ChordDiagram,
    EmptyInput,
    GaussCode,
    GaussCodeError,
    NotDoubleOccurrence,
    OddLength,
    apply_symmetry,
    canonical_key,
    enumerate_canonical,
    format_code,
    parse_code,
    to_diagram,
)
from .criteria import (
    Criterion,
    CriterionReport,
    CriteriaDisagree,
    build_modified_graph,
    check_all,
    check_cycle_weight,
    check_dehn,
    check_evenness,
    check_gauss_parity,
    check_gl123,
    check_main_theorem,
    check_stz_bruteforce,
    check_stz_linear,
    check_touch,
    dehn_transform,
    is_realizable,
    realizability_system,
)
from .gf2 import Gf2Matrix, Gf2Solution, Gf2System, is_idempotent, solve, square, stz_bruteforce
from .interlace import (
    InterlacementGraph,
    WeightedInterlacementGraph,
    adjacency_matrix,
    common_neighbor_parity,
    interlacement_graph,
    weighted_graph,
)
from .tablegen import CountRow, count_table, gap_diagrams

__version__ = "0.1.0"
