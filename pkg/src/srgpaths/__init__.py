"""Induced P4, P5 and co-P5 subgraphs of strongly regular graphs."""

from .errors import SrgPathsError
from .graph import Graph, complement, distance_layers, girth, induced_subgraph, isomorphic_small
from .patterns import Pattern, SearchOutcome, find_induced, is_cograph
from .srg import SrgParams, complement_params, is_primitive, multipartite_decomposition, srg_params

__all__ = [
    "Graph",
    "Pattern",
    "SearchOutcome",
    "SrgParams",
    "SrgPathsError",
    "complement",
    "complement_params",
    "distance_layers",
    "find_induced",
    "girth",
    "induced_subgraph",
    "is_cograph",
    "is_primitive",
    "isomorphic_small",
    "multipartite_decomposition",
    "srg_params",
]
