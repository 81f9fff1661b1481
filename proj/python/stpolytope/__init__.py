"""Facet descriptions of spanning tree polytopes.

Every function takes the graph as edge-list text, one "u v [label]" per line.
"""

import json

from ._core import (
    CapacityError,
    DisconnectedError,
    InputError,
    blocks,
    closures,
    facets,
    locked,
    to_ine,
    to_lp,
    tree_count,
    verify_json,
)

__all__ = [
    "CapacityError",
    "DisconnectedError",
    "InputError",
    "blocks",
    "closures",
    "facets",
    "locked",
    "to_ine",
    "to_lp",
    "tree_count",
    "verify",
]


def verify(edge_list, system):
    """Check a SystemJSON dict (or JSON string) against the graph's spanning trees."""
    if not isinstance(system, str):
        system = json.dumps(system)
    return verify_json(edge_list, system)
