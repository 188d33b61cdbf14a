"""Instrumented reference oracles for the dynamic problems the reduction
gadgets target."""

from .arrays import EricksonOracle, PaghOracle, ZeroPrefixOracle
from .base import CountedOracle, FaultPlan, OracleError
from .connectivity import DFailureOracle, SubgraphConnectivityOracle, TransitiveClosureOracle
from .densest import DensestSubgraphOracle, densest_subgraph_exact, subset_density
from .distances import (
    ColorDistanceOracle,
    DiameterOracle,
    DistanceOracle,
    EvenShiloachOracle,
    TriangleOracle,
    zero_one_bfs,
)
from .graphs import DynGraph, bfs_dist, graph_from_text, graph_to_text
from .matching import BipartiteMatchingOracle, maximum_matching_size, two_color
from .scripts import format_script, parse_script, run_script

__all__ = [
    "BipartiteMatchingOracle",
    "ColorDistanceOracle",
    "CountedOracle",
    "DFailureOracle",
    "DensestSubgraphOracle",
    "DiameterOracle",
    "DistanceOracle",
    "DynGraph",
    "EricksonOracle",
    "EvenShiloachOracle",
    "FaultPlan",
    "OracleError",
    "PaghOracle",
    "SubgraphConnectivityOracle",
    "TransitiveClosureOracle",
    "TriangleOracle",
    "ZeroPrefixOracle",
    "bfs_dist",
    "densest_subgraph_exact",
    "format_script",
    "graph_from_text",
    "graph_to_text",
    "maximum_matching_size",
    "parse_script",
    "run_script",
    "subset_density",
    "two_color",
    "zero_one_bfs",
]
