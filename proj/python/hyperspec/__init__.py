"""Spectral bounds for uniform hypergraphs."""

from ._hyperspec import (
    Hypergraph,
    HyperspecError,
    bound_ids,
    complement,
    complete_bipartite_graph,
    complete_bipartite_uniform,
    complete_uniform,
    evaluate_bounds,
    exact_charpoly,
    invariants,
    is_connected,
    parse,
    random_connected_uniform,
    read_file,
    single_edge,
    spectral_summary,
    spectrum,
    strong_chromatic_number,
    to_hg,
    to_json,
    verify,
    weak_independence_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
