"""Localization game: exact solver, game structures and tree strategies."""

import json as _json

from . import _locgame
from ._locgame import (
    CapacityError,
    Graph,
    ParseError,
    PreconditionError,
    StrategyError,
    connected_graphs,
    contains_t33,
    distance_colorings,
    format_structure,
    game_value,
    leaf_count,
    metric_dimension,
    named,
    parse_edge_list,
    parse_graph6,
    structure_rows,
    trees,
    zeta,
)


def simulate(graph, strategy, k=None):
    """Worst case of a strategy against every robber, as a dict."""
    return _json.loads(_locgame._simulate_json(graph, strategy, k))


def verify(suite, n_max=0, seeds=200, samples=200, threads=0):
    """Run a verification suite and return its report as a dict."""
    return _json.loads(_locgame._verify_json(suite, n_max, seeds, samples, threads))


__all__ = [
    "CapacityError",
    "Graph",
    "ParseError",
    "PreconditionError",
    "StrategyError",
    "connected_graphs",
    "contains_t33",
    "distance_colorings",
    "format_structure",
    "game_value",
    "leaf_count",
    "metric_dimension",
    "named",
    "parse_edge_list",
    "parse_graph6",
    "simulate",
    "structure_rows",
    "trees",
    "verify",
    "zeta",
]
