"""Edge ideals of graphs: powers, Betti tables, regularity, and checks."""

from ._eideal import (
    BettiTable,
    CheckResult,
    Config,
    Cycle,
    Field,
    Monomial,
    MonomialIdeal,
    Report,
    SimpleGraph,
    betti_table,
    canonical_code,
    check_bounds,
    check_case2_monotonicity,
    check_lemmas,
    check_main,
    check_prop_sum,
    colon,
    edge_ideal,
    encode_graph6,
    enumerate_all_graphs,
    enumerate_connected,
    enumerate_forests,
    enumerate_unicyclic,
    gcd,
    intersect,
    intersect_max_power,
    lcm,
    mixed_ideal,
    odd_cycle_symbolic_sum,
    parse_edge_list,
    parse_graph6,
    power,
    product,
    regularity,
    report_exit_code,
    sum,
    symbolic_member,
    symbolic_power,
    taylor_strand_betti,
    __version__,
)

__all__ = [
    "BettiTable",
    "CheckResult",
    "Config",
    "Cycle",
    "Field",
    "Monomial",
    "MonomialIdeal",
    "Report",
    "SimpleGraph",
    "betti_table",
    "canonical_code",
    "check_bounds",
    "check_case2_monotonicity",
    "check_lemmas",
    "check_main",
    "check_prop_sum",
    "colon",
    "edge_ideal",
    "encode_graph6",
    "enumerate_all_graphs",
    "enumerate_connected",
    "enumerate_forests",
    "enumerate_unicyclic",
    "gcd",
    "intersect",
    "intersect_max_power",
    "lcm",
    "mixed_ideal",
    "odd_cycle_symbolic_sum",
    "parse_edge_list",
    "parse_graph6",
    "power",
    "product",
    "regularity",
    "report_exit_code",
    "sum",
    "symbolic_member",
    "symbolic_power",
    "taylor_strand_betti",
    "__version__",
]
