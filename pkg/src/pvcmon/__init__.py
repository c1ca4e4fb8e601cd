"""Partial vertex covers and smallest monopolies under average-threshold constraints."""

from .errors import GadgetConstructionError, GraphFormatError, InfeasibleTargetError
from .graph import (
    BipartitionView,
    Graph,
    bipartition,
    coverage,
    edge_density,
    induced_subgraph,
    is_forest,
    parse_graph,
    to_edge_list_text,
)
from .monopoly import (
    SdynResult,
    SmonResult,
    SpreadTrace,
    ThresholdAssignment,
    dynamo_witness_tau,
    is_dynamic_monopoly,
    is_monopoly,
    monopoly_witness_tau,
    sdyn,
    sdyn_decide,
    sdyn_via_subgraph,
    simulate_spread,
    smon,
    smon_decide,
)
from .pvc import (
    PvcbInstance,
    PvcResult,
    pvc_decide,
    pvc_degree_greedy,
    pvc_exact,
    pvc_greedy_upper,
    pvc_rho_decide,
    pvc_tree,
)
from .reductions import (
    GadgetInstance,
    build_gadget,
    gadget_edge_list,
    gadget_sidecar_json,
    load_gadget,
    pendant_triple_augment,
    reduction_chain,
    verify_lemma1,
    verify_lemma2,
)

__version__ = "0.1.0"

__all__ = [
    "BipartitionView",
    "GadgetConstructionError",
    "GadgetInstance",
    "Graph",
    "GraphFormatError",
    "InfeasibleTargetError",
    "PvcResult",
    "PvcbInstance",
    "SdynResult",
    "SmonResult",
    "SpreadTrace",
    "ThresholdAssignment",
    "bipartition",
    "build_gadget",
    "coverage",
    "dynamo_witness_tau",
    "edge_density",
    "gadget_edge_list",
    "gadget_sidecar_json",
    "induced_subgraph",
    "is_dynamic_monopoly",
    "is_forest",
    "is_monopoly",
    "load_gadget",
    "monopoly_witness_tau",
    "parse_graph",
    "pendant_triple_augment",
    "pvc_decide",
    "pvc_degree_greedy",
    "pvc_exact",
    "pvc_greedy_upper",
    "pvc_rho_decide",
    "pvc_tree",
    "reduction_chain",
    "sdyn",
    "sdyn_decide",
    "sdyn_via_subgraph",
    "simulate_spread",
    "smon",
    "smon_decide",
    "to_edge_list_text",
    "verify_lemma1",
    "verify_lemma2",
]
