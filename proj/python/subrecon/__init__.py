"""Subgraph reconfiguration solvers, witness checking and hardness gadgets."""

from ._subrecon import (
    Graph,
    Instance,
    check_property,
    make_layers_cliques,
    neighbors,
    parse_instance,
    reduce_bcbs_to_spanning_biclique,
    reduce_cliquer_to_diam2,
    reduce_hampath_to_edge_path,
    reduce_misr_to_induced_biclique,
    reduce_spr_to_cycle,
    reduce_spr_to_path,
    reduce_spr_to_spanning_tree_ts,
    serialize_instance,
    shortest_path_layers,
    solve,
    solve_exhaustive,
    verify,
)

__all__ = [
    "Graph",
    "Instance",
    "check_property",
    "make_layers_cliques",
    "neighbors",
    "parse_instance",
    "reduce_bcbs_to_spanning_biclique",
    "reduce_cliquer_to_diam2",
    "reduce_hampath_to_edge_path",
    "reduce_misr_to_induced_biclique",
    "reduce_spr_to_cycle",
    "reduce_spr_to_path",
    "reduce_spr_to_spanning_tree_ts",
    "serialize_instance",
    "shortest_path_layers",
    "solve",
    "solve_exhaustive",
    "verify",
]
