"""Degree-constrained factors of multigraphs."""

import json

from ._gfactor import (
    CapExceeded,
    InputError,
    MultiGraph,
    TheoremViolation,
    bipartite_index,
    campaign_ids,
    edge_connectivity,
    eulerian_half_factor,
    eulerian_orientation,
    factor_degrees,
    find_f_factor,
    find_interval_factor,
    find_two_point_factor,
    gen_functions,
    gen_tree_connected,
    gf_factor_bi_large,
    interval_orientation,
    lovasz_condition,
    parse_graph,
    serialize_graph,
    toughness,
    tree_connected_gf,
    tree_packing,
    tree_packing_number,
    tutte_condition,
    verify_theorem_json,
)


def verify_theorem(id, trials, **params):
    """Run a campaign and return the report as a dict."""
    return json.loads(verify_theorem_json(id, trials, **params))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
