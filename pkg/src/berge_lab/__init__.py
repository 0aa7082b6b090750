"""Berge cycles in hypergraphs, bipartite frames and their extremal bounds.

Exact search for (Berge) circumference, the structural toolkit for long
cycles in bipartite graphs, exact-rational bound checks, generators for
the extremal families and exhaustive verification campaigns.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bigraph import BipartiteGraph, blocks, components, is_2_connected, is_connected
from .bounds import (
    FRAME_THEOREMS,
    HYPERGRAPH_THEOREMS,
    THEOREMS,
    Frame,
    Inapplicable,
    VerdictReport,
    bound_value,
    check_theorem,
    deficiency,
    deficiency_total,
    incidence_frame,
    special_block_count,
)
from .circumference import (
    CycleWitness,
    NotInRegime,
    berge_circumference,
    berge_cycle,
    berge_path,
    circumference,
    has_berge_cycle_at_least,
    has_cycle_at_least,
    is_saturated,
    longest_berge_path,
    longest_path,
    saturate,
)
from .constructions import lift_for_paths, make_block, make_block_tree, make_ht, make_star, make_t1_family
from .enumeration import CampaignSpec, CensusResult, enumerate_hypergraphs, max_good_edges, run_campaign
from .formats import FormatError, read_instance, write_instance
from .hypercore import (
    BergeWitness,
    MultiHypergraph,
    hyperblocks,
    incidence_graph,
    is_block,
    is_block_tree,
    lower_rank,
    max_multiplicity,
)
from .structure import (
    HypothesisError,
    check_saturated_crossing_formation,
    crossing_pairs,
    disintegrate,
    long_cycle_from_path,
    mixed_disintegrate,
    path_cover,
)
